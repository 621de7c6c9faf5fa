import json
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

ROOT = Path(os.environ.get("LACALC_SOURCE_DIR", Path(__file__).resolve().parents[2]))
SCHEMAS = ROOT / "schemas"
CLI = os.environ.get("LACALC_CLI", str(ROOT / "build" / "lacalc"))


def schema(name):
    return json.loads((SCHEMAS / name).read_text())


@pytest.mark.parametrize("path", sorted((ROOT / "corpus").glob("*.json")), ids=lambda p: p.name)
def test_corpus_matches_schema(path):
    data = json.loads(path.read_text())
    name = "bivector.v1.json" if "bivector" in data else "algebroid.v1.json"
    jsonschema.validate(data, schema(name))


def test_schemas_are_valid():
    for path in SCHEMAS.glob("*.json"):
        jsonschema.Draft202012Validator.check_schema(json.loads(path.read_text()))


@pytest.mark.skipif(not Path(CLI).exists(), reason="command-line tool not built")
@pytest.mark.parametrize("args", [["betti"], ["betti", "--deformed"], ["--json", "duality", "--modular"]])
def test_betti_reports_match_schema(args):
    for name in ["aff1", "sl2", "heisenberg3", "r3", "abelian4"]:
        out = subprocess.run([CLI, *args, str(ROOT / "corpus" / f"{name}.json")], capture_output=True, text=True)
        assert out.returncode == 0
        jsonschema.validate(json.loads(out.stdout), schema("betti-report.v1.json"))
