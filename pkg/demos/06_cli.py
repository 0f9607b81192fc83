# # Driving the command-line tool
#
# `zermelo --input spec.json` runs the whole pipeline and writes a JSON
# report. Exit status 0 means every check passed, 1 means bad input and 2
# means a check failed.

import json
import subprocess
import sys

spec = {
    "atoms": ["a", "b", "c"],
    "choice": {"kind": "seeded", "seed": 9},
    "options": {"oracle": True},
}

proc = subprocess.run(
    [sys.executable, "-m", "zermelo", "--input", "-"],
    input=json.dumps(spec).encode(), capture_output=True, check=False,
)
report = json.loads(proc.stdout)
print("exit:", proc.returncode, "status:", report["status"])
print("order:", report["order"]["sequence"])
print("checks:", report["checks"])

# The text form is easier to read at a terminal.

proc = subprocess.run(
    [sys.executable, "-m", "zermelo", "--input", "-", "--emit", "text"],
    input=json.dumps(spec).encode(), capture_output=True, check=False,
)
print(proc.stdout.decode())
