import subprocess
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize("name,args,expect", [
    ("kostka_sweep.py", ["--max-degree", "4"], "45/45 checks passed"),
    ("lemma_report.py", ["--bases", "3"], "base 3: sigma-insertion: 30/30 conformant"),
    ("collapse_pairs.py", ["--max-degree", "5"], "degree 5: pairs=10, offset ok=10"),
])
def test_script_runs(name, args, expect):
    proc = subprocess.run([sys.executable, str(SCRIPTS / name), *args], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert expect in proc.stdout
