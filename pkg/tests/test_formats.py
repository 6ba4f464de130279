import io
import pathlib

import pytest

import glimca
from glimca import formats

from .util import *

def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)

    return str(path)

def test_load_sample_rules():
    assert formats.ca.load(sample("id.ca")).name == "identity"
    assert formats.ca.load(sample("shift.ca")).name == "shift"
    assert formats.ca.load(sample("swap.ca")).name == "swap"
    assert formats.ca.load(sample("rule110.ca")).number == 110

    rule = formats.ca.load(sample("min.ca"))
    assert rule.radius == 1
    assert rule.name == "min.ca"

    builtin = glimca.LocalRule.from_builtin("min")
    for neighborhood in BINARY.words(3):
        assert rule(neighborhood) == builtin(neighborhood)

def test_load_signal_rule():
    rule = formats.ca.load(sample("signal.ca"))

    assert isinstance(rule, glimca.SignalRule)
    assert rule.alphabet.size == 88

    with pytest.raises(ValueError):
        formats.ca.dump(rule)

    assert formats.ca.dump(rule, machine="accept.tm") == "program: signal\nmachine: accept.tm\n"

def test_dump_rule():
    text = formats.ca.dump(formats.ca.load(sample("min.ca")))
    assert text.startswith("alphabet: 0 1\nradius: 1\n0 0 0 -> 0\n")
    assert text.count("->") == 8

    reloaded = formats.ca.load(io.StringIO(text))
    for neighborhood in BINARY.words(3):
        assert reloaded(neighborhood) == min(neighborhood[1:])

    swap = glimca.LocalRule.from_builtin("swap", alphabet=glimca.Alphabet("abc"))
    assert formats.ca.dump(swap) == "alphabet: a b c\nbuiltin: swap\n"

    buffer = io.StringIO()
    assert formats.ca.dump(glimca.ElementaryRule(30), buffer) == len("builtin: elementary 30\n")
    assert buffer.getvalue() == "builtin: elementary 30\n"

@pytest.mark.parametrize("text, line, message", [
    ("alphabet: 0 1\nradius: 1\n0 1 -> 1\n",                 3, "Expected 3 symbols"),
    ("alphabet: 0 1\nradius: 1\n0 1 2 -> 1\n",               3, "'2'"),
    ("alphabet: 0 1\nradius: 1\n0 0 0 -> 1\n0 0 0 -> 0\n",   4, "Conflicting entry"),
    ("// a comment\nbuiltin: nothing\n",                     2, "No builtin rule named"),
    ("program: other\n",                                     1, "Unknown program"),
    ("program: signal\n",                                    1, "needs a 'machine' line"),
    ("alphabet: 0 1\n\nradius: one\n",                       3, "Radius must be an integer"),
    ("alphabet: 0 1\nradius: -1\n",                          2, "non-negative"),
    ("alphabet: 0 1\nalphabet: 0 1\n",                       2, "Duplicate"),
    ("alphabet: 0 1\nrule 110\n",                            2, "Unrecognized line"),
    ("alphabet: 0 1\nradius: 1\ndefault -> 0 1\n",           3, "default -> symbol"),
])
def test_rule_parse_errors(tmp_path, text, line, message):
    path = write(tmp_path, "bad.ca", text)

    with pytest.raises(glimca.ParseError) as info:
        formats.ca.load(path)

    assert info.value.path == path
    assert info.value.line == line
    assert str(info.value).startswith(f"{path}:{line}: ")
    assert message in str(info.value)

def test_rule_file_errors(tmp_path):
    with pytest.raises(glimca.ParseError, match="Missing 'alphabet'"):
        formats.ca.load(io.StringIO("radius: 1\n"))

    with pytest.raises(glimca.ParseError, match="Missing 'radius'"):
        formats.ca.load(io.StringIO("alphabet: 0 1\n"))

    with pytest.raises(glimca.ParseError, match="no default"):
        formats.ca.load(io.StringIO("alphabet: 0 1\nradius: 0\n0 -> 1\n"))

    path = write(tmp_path, "lost.ca", "program: signal\nmachine: nowhere.tm\n")
    with pytest.raises(glimca.ParseError, match="Cannot read machine") as info:
        formats.ca.load(path)

    assert info.value.line == 2

def test_machine_path_is_relative_to_rule(tmp_path):
    machines = tmp_path / "machines"
    machines.mkdir()
    (machines / "accept.tm").write_text(pathlib.Path(sample("accept.tm")).read_text())

    path = write(tmp_path, "signal.ca", "program: signal\nmachine: machines/accept.tm\n")

    assert formats.ca.load(path).machine.initial == "q0"

def test_load_sample_subshifts():
    assert formats.sft.load(sample("golden.sft")) == glimca.Sft.from_forbidden(BINARY, ["11"])
    assert formats.sft.load(sample("period2.sft")) == glimca.Sft.from_forbidden(BINARY, ["00", "11"])
    assert formats.sft.load(sample("increasing.sft")) == glimca.Sft.from_forbidden(BINARY, ["10"])

def test_load_multichar_subshift():
    sft = formats.sft.load(io.StringIO("alphabet: x0 x1\nwindow: 2\nallow: x0,x1 x1,x0\n"))

    assert sft.alphabet.size == 2
    assert sft.language(2) == {("x0", "x1"), ("x1", "x0")}

@pytest.mark.parametrize("text, line, message", [
    ("alphabet: 0 1\nforbid: 12\n",                  2, "'2'"),
    ("alphabet: 0 1\nforbid: 11\nwindow: 2\n",       3, "cannot be used with 'forbid'"),
    ("alphabet: 0 1\nwindow: 0\nallow: 0\n",         2, "Window must be positive"),
    ("alphabet: 0 1\nwindow: two\nallow: 00\n",      2, "Window must be an integer"),
    ("alphabet: 0 1\nwindow: 2\nallow: 00 1\n",      3, "does not have length 2"),
    ("alphabet: 0 1\nforbid 11\n",                   2, "Unrecognized line"),
])
def test_subshift_parse_errors(tmp_path, text, line, message):
    path = write(tmp_path, "bad.sft", text)

    with pytest.raises(glimca.ParseError) as info:
        formats.sft.load(path)

    assert str(info.value).startswith(f"{path}:{line}: ")
    assert message in str(info.value)

def test_load_subshift_from_bytes():
    assert formats.sft.load(b"alphabet: 0 1\nforbid: 11\n") == glimca.Sft.from_forbidden(BINARY, ["11"])
    assert not hasattr(glimca.util, "is_iterable")

def test_subshift_file_errors():
    with pytest.raises(glimca.ParseError, match="Missing 'alphabet'"):
        formats.sft.load(io.StringIO("forbid: 11\n"))

    with pytest.raises(glimca.ParseError, match="Expected 'forbid'"):
        formats.sft.load(io.StringIO("alphabet: 0 1\nwindow: 2\n"))

def test_load_machine():
    machine = formats.tm.load(sample("accept.tm"))

    assert machine.states == ("q0", "qf1", "qf2")
    assert machine.initial == "q0"
    assert len(machine.transitions) == 12

def test_dump_machine():
    text = formats.tm.dump(formats.tm.load(sample("accept.tm")))

    assert text.startswith("states: q0 qf1 qf2\ninitial: q0\n")
    assert "q0 # _ -> qf2 _ S\n" in text
    assert formats.tm.dump(formats.tm.load(io.StringIO(text))) == text

@pytest.mark.parametrize("text, line, message", [
    ("states: q0 qr qa\nq0 # _ -> qa _\n",     2, "Expected 'state read_only read_write"),
    ("states: q0 qr qa\nq0 # _ -> qa _ X\n",   2, "Move must be L, R or S"),
    ("states: q|0 qr qa\n",                    1, "contains '|'"),
    ("states: q0 qr qa\nstates: q0\n",         2, "Duplicate"),
])
def test_machine_parse_errors(tmp_path, text, line, message):
    header = "initial: q0\nfinal1: qr\nfinal2: qa\ngamma: 1\ngammaA: #\n"
    path   = write(tmp_path, "bad.tm", text + header)

    with pytest.raises(glimca.ParseError) as info:
        formats.tm.load(path)

    assert str(info.value).startswith(f"{path}:{line}: ")
    assert message in str(info.value)

def test_machine_file_errors():
    with pytest.raises(glimca.ParseError, match="Missing 'gammaA'"):
        formats.tm.load(io.StringIO("states: q0 qr qa\ninitial: q0\nfinal1: qr\nfinal2: qa\ngamma: 1\n"))

    # The initial state must be one of the states
    with pytest.raises(glimca.ParseError) as info:
        formats.tm.load(io.StringIO("states: q0 qr qa\ninitial: qx\nfinal1: qr\nfinal2: qa\ngamma: 1\ngammaA: #\n"))

    assert info.value.line is None

def test_parse_configuration():
    cyclic = formats.parse_configuration("cyclic:011", BINARY)
    assert cyclic.is_cyclic
    assert cyclic.window(0, 5) == tuple("011011")
    assert formats.format_configuration(cyclic, BINARY) == "cyclic:011"

    two_sided = formats.parse_configuration(" 0^inf ( 1 @ -1 ) 01^inf ", BINARY)
    assert not two_sided.is_cyclic
    assert two_sided.window(-3, 3) == tuple("0010101")
    assert formats.parse_configuration(formats.format_configuration(two_sided, BINARY), BINARY) == two_sided

    empty_center = formats.parse_configuration("0^inf (@0) 1^inf", BINARY)
    assert empty_center.window(-1, 0) == ("0", "1")

@pytest.mark.parametrize("literal", [
    "cyclic:",
    "cyclic:012",
    "0^inf 1^inf",
    "0^inf (1@x) 0^inf",
    "2^inf (1@0) 0^inf",
    "0101",
])
def test_parse_configuration_errors(literal):
    with pytest.raises(glimca.ParseError):
        formats.parse_configuration(literal, BINARY)

def test_parse_cylinder():
    assert formats.parse_cylinder("01", BINARY) == glimca.Cylinder("01", 0)
    assert formats.parse_cylinder("1@3", BINARY) == glimca.Cylinder("1", 3)
    assert formats.parse_cylinder("@0", BINARY) == glimca.Cylinder((), 0)

    alphabet = glimca.Alphabet(["x0", "x1"])
    assert formats.parse_cylinder("x0,x1@-2", alphabet) == glimca.Cylinder(("x0", "x1"), -2)

    with pytest.raises(glimca.ParseError):
        formats.parse_cylinder("01@x", BINARY)

    with pytest.raises(glimca.ParseError):
        formats.parse_cylinder("2@0", BINARY)
