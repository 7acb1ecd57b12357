"""The model text format, the pretty-printer round trip, and the CLI."""

import json

import pytest

from pidsym import MODEL_NAMES, Pid, load_model, model_text, parse_marking, parse_model, print_model
from pidsym.cli import main
from pidsym.parser import ModelSyntaxError, ModelValidationError

P = Pid.parse

SPAWNER = """\
# one transition that forever spawns children of the root
net spawner
place g GEN
place out P
trans grow
  in g { (p, c) }
  out g { (p, c+1); (p.(c+1), 0) }
  out out { (p.(c+1)) }
end
"""


def test_parse_spawner():
    net = parse_model(SPAWNER)
    assert net.name == "spawner"
    assert [p.name for p in net.places] == ["g", "out"]
    assert net.generator.name == "g"
    assert len(net.transitions) == 1
    assert net.init.tokens("g") == ((P("1"), 0),)


def test_all_bundled_models_parse_and_validate():
    for name in MODEL_NAMES:
        net = load_model(name)
        assert net.transitions, name


def test_print_parse_roundtrip():
    for name in MODEL_NAMES:
        net = load_model(name)
        assert parse_model(print_model(net)) == net
    net = parse_model(SPAWNER)
    assert parse_model(print_model(net)) == net


def test_empty_file_is_a_syntax_error():
    with pytest.raises(ModelSyntaxError):
        parse_model("")


def test_unknown_directive():
    with pytest.raises(ModelSyntaxError) as info:
        parse_model("net x\nplaces g GEN\n")
    assert info.value.line_no == 2


def test_unclosed_transition_is_a_syntax_error():
    with pytest.raises(ModelSyntaxError):
        parse_model("net x\nplace g GEN\ntrans t\n  in g { (p, c) }\n")


def test_two_generator_places_fail_validation():
    text = "net x\nplace g1 GEN\nplace g2 GEN\n"
    with pytest.raises(ModelValidationError) as info:
        parse_model(text)
    assert any(v.req == 1 for v in info.value.violations)


def test_bad_generator_init_fails_req2():
    text = "net x\nplace g GEN\ninit g { (2, 0) }\n"
    with pytest.raises(ModelValidationError) as info:
        parse_model(text)
    assert any(v.req == 2 for v in info.value.violations)


def test_guard_operators_parse_next_to_comments():
    text = """\
net x
place g GEN
trans t  # trailing comment
  guard u #1 v and u << w
  in g { (u, cu); (v, cv); (w, cw) }
  out g { (u, cu); (v, cv); (w, cw) }
end
"""
    net = parse_model(text)
    assert "#1" in str(net.transitions[0].guard)
    assert "<<" in str(net.transitions[0].guard)


def test_symbols_and_negative_ints():
    text = """\
net x
place g GEN
place s D,D
init s { (READY, -2) }
trans t
  guard k == -2
  in s { (READY, k) }
  out s { (DONE, k+1) }
end
"""
    net = parse_model(text)
    assert net.init.tokens("s") == (("READY", -2),)


def test_parse_marking_for_canonize():
    net = load_model("spawn_reap")
    m = parse_marking("g { (1, 2); (1.2, 0) }\nbusy { (1.2) }\n", net)
    assert m.tokens("g") == ((P("1"), 2), (P("1.2"), 0))
    assert m.tokens("busy") == ((P("1.2"),),)
    with pytest.raises(ModelSyntaxError):
        parse_marking("nowhere { (1) }", net)


def test_marking_file_pid_typing():
    net = load_model("spawn_reap")
    with pytest.raises(ModelSyntaxError):
        parse_marking("g { (READY, 0) }", net)  # symbol at a P position
    with pytest.raises(ModelSyntaxError):
        parse_marking("cap { (1.2) }", net)  # pid at a D position


# -- command line ------------------------------------------------------------


def test_cli_check_ok(capsys):
    assert main(["check", "spawn_reap"]) == 0
    assert "ok: spawn_reap" in capsys.readouterr().out


def test_cli_check_bad_model(tmp_path, capsys):
    bad = tmp_path / "bad.tnet"
    bad.write_text("net x\nplace g GEN\ninit g { (2, 0) }\n")
    assert main(["check", str(bad)]) == 1
    assert "Req 2" in capsys.readouterr().err


def test_cli_explore_json(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["explore", "ring", "--mode", "stripped", "--json", str(out)])
    assert code == 0
    report = json.loads(out.read_text())
    assert report["states"] == 4 and report["mode"] == "stripped"


def test_cli_explore_fail_on_truncate(tmp_path):
    code = main(["explore", "spawn_reap", "--mode", "none", "--max-states", "50", "--fail-on-truncate"])
    assert code == 2


def test_cli_explore_oracle_infeasible(capsys):
    code = main(["explore", "fanout_n", "--mode", "oracle", "--oracle-max-pids", "4"])
    assert code == 1
    assert "oracle infeasible" in capsys.readouterr().err


def test_cli_compare(capsys):
    assert main(["compare", "ring"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert {row["mode"] for row in report["modes"]} == {"none", "expanded", "stripped", "oracle"}


def test_cli_canonize(tmp_path, capsys):
    marking = tmp_path / "m.mrk"
    marking.write_text("g { (1, 1); (1.1.2, 0) }\n")
    code = main(["canonize", "spawn_reap", "--marking", str(marking)])
    assert code == 0
    out = capsys.readouterr().out
    assert "expanded signature:" in out and "stripped signature:" in out
    assert "digraph" in out


def test_cli_unknown_model(capsys):
    assert main(["check", "no_such_model"]) == 1
    assert "error" in capsys.readouterr().err


def test_fanout_text_parameter():
    net2 = load_model("fanout_n", n=2)
    net5 = load_model("fanout_n", n=5)
    assert len(net2.init.tokens("task")) == 2
    assert len(net5.init.tokens("task")) == 5
    assert model_text("fanout_n").count("(0)") >= 3
