import subprocess
import sys
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def run(name, *args):
    return subprocess.run([sys.executable, str(SCRIPTS / name), *args], capture_output=True, text=True, check=True).stdout


def test_worked_example_script():
    out = run("worked_example.py")
    assert "   3  24  28   5  canonical" in out
    assert "class H2, j_max 0, stabilization step 1" in out


def test_corpus_script(tmp_path):
    out = run("corpus_classes.py", "--count", "20", "--steps", "5", "--json", str(tmp_path / "rows.json"))
    assert "inconsistent graphs: none" in out
    assert (tmp_path / "rows.json").exists()
