"""Run bialg over the corpus and validate every JSON report against the schema."""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

tool, corpus, schema_path = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
schema = json.loads(schema_path.read_text())

commands = [["reproduce", i] for i in
            ["ex-2.2", "ex-2.13", "ex-3.13", "ex-4.2", "ex-4.5", "ex-4.9", "ex-4.27", "ex-5.13"]]
for f in sorted(corpus.glob("*.json")):
    if '"kind": "tensor"' not in f.read_text():
        commands.append(["check", str(f)])
commands.append(["affine", "--dendriform", str(corpus / "D-bialgebra-e1e1.json"), "--window", "2", "--check", "asi"])
with tempfile.TemporaryDirectory() as tmp:
    commands.append(["induce", "--construction", "prelie", "--dendriform", str(corpus / "ex-D-alg-iii.json"),
                     "--out", str(Path(tmp) / "out.json")])
    for cmd in commands:
        proc = subprocess.run([tool, *cmd, "--format", "json"], capture_output=True, text=True)
        if proc.returncode not in (0, 1):
            sys.exit(f"{cmd}: exit {proc.returncode}: {proc.stderr}")
        report = json.loads(proc.stdout)
        jsonschema.validate(report, schema)
        if (report["status"] == "pass") != (proc.returncode == 0):
            sys.exit(f"{cmd}: status {report['status']} disagrees with exit {proc.returncode}")
print(f"{len(commands)} reports valid")
