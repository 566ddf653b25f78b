import pathlib
import subprocess
import sys

SCRIPT = pathlib.Path(__file__).resolve().parent.parent / "scripts" / "worked_examples.py"


def test_worked_examples_script_runs():
    proc = subprocess.run([sys.executable, str(SCRIPT)], capture_output=True, text=True, check=False)
    assert proc.returncode == 0, proc.stderr
    assert "lift of s1^3 is the identity: True" in proc.stdout
    assert "s1 then s2^3 lifts to the same map: True" in proc.stdout
    assert "False" not in proc.stdout.split("== twist")[1].split("== one-holed")[0]
    assert "covering checks on the radius-3 ball: ok" in proc.stdout
