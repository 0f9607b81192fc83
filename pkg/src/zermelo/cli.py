"""Command-line front end.

Reads one JSON problem description, builds the chain and induced order, runs
every check and prints a deterministic report.  Exit codes: 0 when every
check passes, 2 when a check fails, 1 on input errors.

Input schema::

    {"atoms": ["a", "b"],
     "choice": {"kind": "min"} | {"kind": "seeded", "seed": 7}
             | {"kind": "table", "entries": [{"subset": ["a"], "pick": "a"}, ...]},
     "options": {"oracle": false, "verify": "exhaustive" | {"sample": 100},
                 "format": "json" | "text"}}
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Union

from . import __version__
from .choice import choice_from_json
from .errors import MembershipViolation, MissingTableEntry, SpecError, ZermeloError
from .oracle import (
    ORACLE_LIMIT,
    check_prefix_theorem,
    comparability_sweep,
    maximality_check,
    run_oracle,
)
from .regular import build_chain, verify_regular
from .rng import MASK64
from .sets import MAX_ATOMS, GroundSet, family_union
from .wellorder import (
    EXHAUSTIVE_WELLORDER_LIMIT,
    check_injective,
    check_surjective,
    induced_order,
    verify_wellorder,
)

DEFAULT_SAMPLES = 1000

TOP_FIELDS = {"atoms", "choice", "options"}
OPTION_FIELDS = {"oracle", "verify", "format"}
CHOICE_FIELDS = {"min": {"kind"}, "seeded": {"kind", "seed"}, "table": {"kind", "entries"}}


@dataclass
class ProblemSpec:
    atoms: list
    choice: dict
    oracle: bool = False
    verify: Union[str, tuple, None] = None
    format: str = "json"
    sample_seed: int = 0
    raw: Optional[dict] = None

    def effective_verify(self):
        if self.verify is not None:
            return self.verify
        if len(self.atoms) <= EXHAUSTIVE_WELLORDER_LIMIT:
            return "exhaustive"
        return ("sample", DEFAULT_SAMPLES)


def _unknown(obj, allowed, where):
    extra = sorted(set(obj) - allowed)
    if extra:
        raise SpecError(f"{where}: unknown field(s) {', '.join(map(repr, extra))}")


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def _parse_verify(value, where):
    if value == "exhaustive":
        return "exhaustive"
    if isinstance(value, dict) and set(value) == {"sample"} and _is_int(value["sample"]) and value["sample"] >= 0:
        return ("sample", value["sample"])
    if isinstance(value, str) and value.startswith("sample:"):
        n = value[len("sample:"):]
        if n.isdigit():
            return ("sample", int(n))
    raise SpecError(f"{where}: expected \"exhaustive\" or {{\"sample\": <n>}}, got {json.dumps(value)}")


def _check_choice(choice, atoms):
    if not isinstance(choice, dict):
        raise SpecError("choice: expected an object")
    kind = choice.get("kind")
    if kind not in CHOICE_FIELDS:
        raise SpecError(f"choice.kind: expected one of min, seeded, table, got {json.dumps(kind)}")
    _unknown(choice, CHOICE_FIELDS[kind], "choice")
    if kind == "seeded":
        seed = choice.get("seed")
        if not _is_int(seed) or not 0 <= seed <= MASK64:
            raise SpecError("choice.seed: expected an unsigned 64-bit integer")
    if kind == "table":
        entries = choice.get("entries")
        if not isinstance(entries, list):
            raise SpecError("choice.entries: expected a list")
        known = set(atoms)
        seen = set()
        for i, entry in enumerate(entries):
            where = f"choice.entries[{i}]"
            if not isinstance(entry, dict):
                raise SpecError(f"{where}: expected an object")
            _unknown(entry, {"subset", "pick"}, where)
            subset, pick = entry.get("subset"), entry.get("pick")
            if not isinstance(subset, list) or not subset:
                raise SpecError(f"{where}.subset: expected a nonempty list of atom labels")
            for label in subset:
                if not isinstance(label, str) or label not in known:
                    raise SpecError(f"{where}.subset: unknown atom {json.dumps(label)}")
            if not isinstance(pick, str) or pick not in known:
                raise SpecError(f"{where}.pick: unknown atom {json.dumps(pick)}")
            key = frozenset(subset)
            if key in seen:
                raise SpecError(f"{where}.subset: duplicate entry for {json.dumps(sorted(key))}")
            seen.add(key)


def parse_spec(text: Union[str, bytes]) -> ProblemSpec:
    """Parse and validate a JSON problem description, raising :class:`SpecError`."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SpecError(f"input is not UTF-8: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise SpecError("top level: expected an object")
    _unknown(doc, TOP_FIELDS, "top level")
    if "atoms" not in doc:
        raise SpecError("atoms: missing required field")
    if "choice" not in doc:
        raise SpecError("choice: missing required field")
    atoms = doc["atoms"]
    if not isinstance(atoms, list):
        raise SpecError("atoms: expected a list of strings")
    seen = {}
    for i, label in enumerate(atoms):
        if not isinstance(label, str) or not label:
            raise SpecError(f"atoms[{i}]: expected a nonempty string, got {json.dumps(label)}")
        if label in seen:
            raise SpecError(f"atoms[{i}]: duplicate label {json.dumps(label)} (first at atoms[{seen[label]}])")
        seen[label] = i
    if len(atoms) > MAX_ATOMS:
        raise SpecError(f"atoms: {len(atoms)} labels exceed the capacity of {MAX_ATOMS}")
    _check_choice(doc["choice"], atoms)

    spec = ProblemSpec(atoms=list(atoms), choice=doc["choice"], raw=doc)
    options = doc.get("options", {})
    if not isinstance(options, dict):
        raise SpecError("options: expected an object")
    _unknown(options, OPTION_FIELDS, "options")
    if "oracle" in options:
        if not isinstance(options["oracle"], bool):
            raise SpecError("options.oracle: expected true or false")
        spec.oracle = options["oracle"]
    if "verify" in options:
        spec.verify = _parse_verify(options["verify"], "options.verify")
    if "format" in options:
        if options["format"] not in ("json", "text"):
            raise SpecError("options.format: expected \"json\" or \"text\"")
        spec.format = options["format"]
    validate_limits(spec)
    return spec


def validate_limits(spec: ProblemSpec) -> None:
    n = len(spec.atoms)
    if spec.oracle and n > ORACLE_LIMIT:
        raise SpecError(f"options.oracle: the oracle needs at most {ORACLE_LIMIT} atoms, got {n}")
    if spec.verify == "exhaustive" and n > EXHAUSTIVE_WELLORDER_LIMIT:
        raise SpecError(
            f"options.verify: exhaustive verification needs at most {EXHAUSTIVE_WELLORDER_LIMIT} atoms, got {n}")


def _verify_label(mode):
    return mode if mode == "exhaustive" else f"sample:{mode[1]}"


def _oracle_section(ground, phi, chain):
    run = run_oracle(ground, phi)
    q = run.q_union
    q_report = verify_regular(q, phi)
    sweep = comparability_sweep(run.regular_families, phi)
    max_full = maximality_check(q, phi)
    maximal_iff_full = all(
        maximality_check(f, phi).maximal == (f == chain.family()) for f in run.regular_families)
    section = {
        "candidate_count": run.candidate_count,
        "family_count": len(run.regular_families),
        "rejected_by": run.to_json()["rejected_by"],
        "prefix_theorem": check_prefix_theorem(run),
        "q": [str(s) for s in q],
        "q_equals_chain": q == chain.family(),
        "q_regular": q_report.overall,
        "q_covers_ground": family_union(q) == ground.full,
        "maximality": max_full.to_json(),
        "maximal_iff_full_chain": maximal_iff_full,
        "comparability": sweep.to_json(),
    }
    checks = {
        "oracle_prefix_theorem": section["prefix_theorem"],
        "oracle_q_equals_chain": section["q_equals_chain"],
        "oracle_q_regular": section["q_regular"],
        "oracle_q_covers_ground": section["q_covers_ground"],
        "oracle_maximality": max_full.maximal and maximal_iff_full,
        "oracle_comparability": sweep.passed,
    }
    return section, checks


def run(spec: ProblemSpec) -> tuple[dict, int]:
    """Execute every construction and check; returns the report and the exit code."""
    validate_limits(spec)
    ground = GroundSet(spec.atoms)
    mode = spec.effective_verify()
    report = {
        "tool": {"name": "zermelo", "version": __version__},
        "input": spec.raw if spec.raw is not None else {"atoms": spec.atoms, "choice": spec.choice},
        "effective_options": {
            "oracle": spec.oracle,
            "verify": _verify_label(mode),
            "format": spec.format,
        },
        "seeds": {
            "choice": spec.choice.get("seed"),
            "sample": spec.sample_seed if mode != "exhaustive" else None,
            "cond2_sample": None,
        },
    }
    try:
        phi = choice_from_json(ground, spec.choice)
        chain = build_chain(ground, phi)
    except (MissingTableEntry, MembershipViolation) as exc:
        raise SpecError(f"choice: {exc}") from None

    checks = {}
    errors = []
    try:
        q = chain.family()
        regularity = verify_regular(q, phi)
        order = induced_order(ground, phi)
        inj = check_injective(q, phi)
        surj = check_surjective(q, phi)
        wo = verify_wellorder(order, mode, seed=spec.sample_seed)
        report["chain"] = chain.to_json()
        report["order"] = order.to_json()
        report["regularity"] = regularity.to_json()
        report["seeds"]["cond2_sample"] = regularity.sample_seed
        report["bijectivity"] = {
            "injective": inj.to_json(),
            "surjective": surj.to_json(),
            "stage_map": [r.to_json() for r in surj.records],
        }
        report["wellorder"] = wo.to_json()
        checks.update(
            chain_regular=regularity.overall,
            injective=inj.passed,
            surjective=surj.passed,
            wellorder=wo.passed,
        )
        if spec.oracle:
            report["oracle"], oracle_checks = _oracle_section(ground, phi, chain)
            checks.update(oracle_checks)
    except (MissingTableEntry, MembershipViolation) as exc:
        raise SpecError(f"choice: {exc}") from None
    except ZermeloError as exc:
        errors.append({"error": type(exc).__name__, "detail": str(exc)})

    passed = not errors and all(checks.values())
    report["checks"] = checks
    if errors:
        report["errors"] = errors
    report["status"] = "pass" if passed else "fail"
    return report, 0 if passed else 2


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def render_text(report: dict) -> str:
    rows = [("tool", f"{report['tool']['name']} {report['tool']['version']}"),
            ("atoms", ", ".join(report["input"]["atoms"]) or "(none)"),
            ("choice", json.dumps(report["input"]["choice"], sort_keys=True)),
            ("verify", report["effective_options"]["verify"])]
    if "chain" in report:
        rows.append(("chain", " < ".join("{" + ",".join(s) + "}" for s in report["chain"])))
        rows.append(("order", " < ".join(report["order"]["sequence"]) or "(empty)"))
        for rec in report["bijectivity"]["stage_map"]:
            rows.append((f"stage {rec['atom']}", f"r={rec['r']} r1={rec['r1']}"))
    if "oracle" in report:
        o = report["oracle"]
        rows.append(("oracle families", f"{o['family_count']} of {o['candidate_count']} candidates"))
    for name, ok in report["checks"].items():
        rows.append((name, "pass" if ok else "FAIL"))
    for err in report.get("errors", []):
        rows.append(("error", f"{err['error']}: {err['detail']}"))
    rows.append(("status", report["status"]))
    width = max(len(k) for k, _ in rows)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zermelo",
        description="Build and verify the well-order of a finite set induced by a choice function.")
    parser.add_argument("--input", required=True, help="problem description JSON ('-' for stdin)")
    parser.add_argument("--emit", choices=("json", "text"), help="output format (overrides options.format)")
    parser.add_argument("--oracle", action="store_true", default=None,
                        help="run the brute-force oracle (at most 4 atoms)")
    parser.add_argument("--verify-subsets", metavar="exhaustive|sample:N",
                        help="well-order verification mode (overrides options.verify)")
    parser.add_argument("--sample-seed", type=int, default=0, help="seed for sampled verification")
    parser.add_argument("--output", help="write the report here instead of stdout")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.input == "-":
            text = sys.stdin.buffer.read()
        else:
            with open(args.input, "rb") as fh:
                text = fh.read()
        spec = parse_spec(text)
        if args.emit:
            spec.format = args.emit
        if args.oracle:
            spec.oracle = True
        if args.verify_subsets:
            spec.verify = _parse_verify(args.verify_subsets, "--verify-subsets")
        if not 0 <= args.sample_seed <= MASK64:
            raise SpecError("--sample-seed: expected an unsigned 64-bit integer")
        spec.sample_seed = args.sample_seed
        report, code = run(spec)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc.strerror}", file=sys.stderr)
        return 1
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    out = render_text(report) if spec.format == "text" else render_json(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
