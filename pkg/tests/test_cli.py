import pytest

import glimca
from glimca.cli import main

from .util import *

SMALL = ["--U", "1", "--T-max", "6", "--K", "2"]

def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)

    return str(path)

def test_sim(capsys):
    assert main(["sim", "--rule", sample("min.ca"), "--config", "cyclic:0101", "--steps", "1"]) == 0
    assert capsys.readouterr().out == "0101\n0000\n"

def test_sim_output_file(tmp_path, capsys):
    out = str(tmp_path / "diagram.csv")

    argv = ["-o", out, "sim", "--rule", sample("shift.ca"), "--config", "0^inf (1@0) 0^inf", "--steps", "2", "--window=-2:1", "--format", "csv"]
    assert main(argv) == 0

    assert capsys.readouterr().out == ""
    with open(out) as f:
        lines = f.read().splitlines()

    assert lines[0] == "t,pos,symbol"
    assert len(lines) == 1 + 3 * 4

def test_verify_geometry(capsys):
    assert main(["verify-geometry", sample("accept.tm"), "--w", "ab", "--m", "1", "--n-range", "5:7"]) == 0

    out = capsys.readouterr().out.splitlines()
    assert len(out) == 6
    assert all(line.endswith(": pass") for line in out)

    assert main(["verify-geometry", sample("accept.tm"), "--w", "a", "--n-range", "4:4"]) == 1
    assert capsys.readouterr().out.startswith("n=4 error:")

def test_sft(capsys):
    assert main(["sft", "--sft", sample("period2.sft"), "--check", "obstruction"]) == 0
    assert capsys.readouterr().out == "obstructed p=2: cannot be the generic limit set (periodic finite factor)\n"

    assert main(["sft", "--sft", sample("period2.sft"), "--check", "period"]) == 0
    assert capsys.readouterr().out == "2\n"

    assert main(["sft", "--sft", sample("golden.sft"), "--check", "mixing"]) == 0
    assert capsys.readouterr().out == "true\n"

    assert main(["sft", "--sft", sample("increasing.sft"), "--check", "transitive"]) == 0
    assert capsys.readouterr().out == "false\n"

    assert main(["sft", "--sft", sample("increasing.sft"), "--check", "components"]) == 0
    assert capsys.readouterr().out == "component 0: 00 01 11\n"

    assert main(["sft", "--sft", sample("increasing.sft"), "--check", "components", "--order", "1"]) == 0
    assert capsys.readouterr().out == "component 0: 0 1\n"

def test_enables(capsys):
    argv = ["enables", "--rule", sample("min.ca"), "--v", "000", "--s", "000"] + SMALL
    assert main(argv) == 0

    out = capsys.readouterr().out.splitlines()
    assert out[0] == "verdict: supported"
    assert out[1] == "hits: 1 2 3 4 5 6"
    assert out[2].startswith("bounds: U=1 T_max=6 K=2 ")
    assert out[3] == "certificate: enabling-supported horizon=6 exact"

def test_enables_refuted(capsys):
    assert main(["enables", "--rule", sample("min.ca"), "--v", "0", "--s", "1"] + SMALL) == 1

    out = capsys.readouterr().out.splitlines()
    assert out[0] == "verdict: refuted-at-bound"
    assert out[1] == "witness: u='' w=''"
    assert out[2] == "hits: "

def test_forcing(tmp_path, capsys):
    zeros = write(tmp_path, "zeros.sft", "alphabet: 0 1\nforbid: 1\n")

    argv = ["forcing", "--rule", sample("min.ca"), "--seed", "0", "--n", "2", "--language", zeros, "--U", "2", "--T-max", "4", "--K", "2"]
    assert main(argv) == 0

    out = capsys.readouterr().out.splitlines()
    assert out[:3] == ["word: 00", "position: 0", "T: 0"]
    assert out[-1] == "certificate: forcing horizon=0 exact"

def test_forcing_not_found(tmp_path, capsys):
    zeros = write(tmp_path, "zeros.sft", "alphabet: 0 1\nforbid: 1\n")

    argv = ["forcing", "--rule", sample("shift.ca"), "--seed", "@0", "--length", "1", "--language", zeros] + SMALL
    assert main(argv) == 1

    assert capsys.readouterr().out.splitlines()[0] == "not found: no extension removes 1"

def test_forcing_estimated(capsys):
    argv = [
        "forcing", "--rule", sample("min.ca"), "--seed", "0", "--n", "2",
        "--U", "2", "--T-max", "16", "--K", "2", "--N", "8", "--T0", "16", "--period", "16", "--sample-seed", "3",
    ]
    assert main(argv) == 0

    out = capsys.readouterr().out.splitlines()
    assert out[0] == "word: 00"
    assert "seed=3" in out[3]

def test_analyze(capsys):
    argv = [
        "analyze", "--rule", sample("min.ca"), "--workers", "2",
        "--U", "1", "--T-max", "16", "--K", "2", "--N", "8", "--T0", "16", "--period", "16", "--n", "3", "--m-max", "2",
    ]
    assert main(argv) == 0

    out = capsys.readouterr().out.splitlines()
    assert out[0] == "rule: min.ca"
    assert out[2] == "estimate: measure-generic heuristic seed=0 T0=16 T_max=16"
    assert out[3:6] == ["language n=1: 0", "language n=2: 00", "language n=3: 000"]
    assert out[-1] == "no exclusions"

def test_analyze_csv(capsys):
    argv = [
        "analyze", "--rule", sample("min.ca"), "--format", "csv",
        "--T-max", "16", "--K", "2", "--N", "8", "--T0", "16", "--period", "16", "--n", "2", "--m-max", "1",
    ]
    assert main(argv) == 0

    out = capsys.readouterr().out.splitlines()
    assert out[0] == "check,hypothesis,citation,result,horizon,evidence"
    assert out[-1].startswith("language,words of length 2,measure-generic heuristic,00,2,")

def test_compile(tmp_path, capsys):
    emitted = str(tmp_path / "accept.ca")

    assert main(["compile", sample("accept.tm"), "--emit-ca", emitted]) == 0
    assert capsys.readouterr().out == "states: 3\ntransitions: 12\nalphabet size: 88\nradius: 3\n"

    rule = glimca.formats.ca.load(emitted)
    assert isinstance(rule, glimca.SignalRule)
    assert rule.alphabet.size == 88

def test_compile_reference(tmp_path, capsys):
    emitted = str(tmp_path / "reference.ca")

    assert main(["compile", "--reference", "--emit-ca", emitted]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "radius: 3"

    with open(emitted) as f:
        assert f.read() == "program: signal\nmachine: reference\n"

def test_show_defaults(capsys):
    assert main(["show-defaults"]) == 0
    first = capsys.readouterr().out

    assert first.startswith("U=3\nT_max=64\nK=8\nbudget=")
    assert first.endswith("seed=0\n")

    assert main(["--show-defaults"]) == 0
    assert capsys.readouterr().out == first

def test_input_errors(tmp_path, capsys):
    bad = write(tmp_path, "bad.ca", "alphabet: 0 1\nradius: x\n")

    assert main(["sim", "--rule", bad, "--config", "cyclic:01"]) == 2
    assert f"{bad}:2:" in capsys.readouterr().err

    assert main(["sim", "--rule", sample("min.ca"), "--config", "cyclic:012"]) == 2
    assert main(["sim", "--rule", str(tmp_path / "missing.ca"), "--config", "cyclic:01"]) == 2
    assert main(["compile"]) == 2
    assert main([]) == 2

    with pytest.raises(SystemExit) as info:
        main(["sft", "--sft", sample("golden.sft"), "--check", "nothing"])

    assert info.value.code == 2

def test_budget_exit(capsys):
    assert main(["sim", "--rule", sample("min.ca"), "--config", "cyclic:0101", "--steps", "1", "--budget", "3"]) == 3
    assert capsys.readouterr().err.startswith("glimca: ")
