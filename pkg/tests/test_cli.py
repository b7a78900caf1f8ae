import json

import pytest

from qnet.cli import EXIT_CAPACITY, EXIT_IO, EXIT_OK, EXIT_VALIDATION, build_parser, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bound_text(capsys, fixture_path):
    code, out, _ = run(capsys, "bound", "--input", fixture_path("star"))
    assert code == EXIT_OK
    assert out.startswith("bound: 2.000 bits per network use\nmethod: brute_force\nside A: a\n")
    assert "distillable network" not in out


def test_bound_text_on_a_distillable_network(capsys, fixture_path):
    code, out, _ = run(capsys, "bound", "--input", fixture_path("diamond"))
    assert code == EXIT_OK
    assert "distillable network: the bound is the min-cut" in out


def test_bound_json(capsys, fixture_path):
    code, out, _ = run(capsys, "bound", "--input", fixture_path("star"), "--format", "json")
    assert code == EXIT_OK
    document = json.loads(out)
    assert list(document) == ["bound", "method", "witness", "distillable_network", "per_edge_weights", "tolerance"]
    assert document["bound"] == 2.0
    assert document["witness"]["cut_set"] == [{"u": "a", "v": "r", "index": 0, "weight": 2.0}]
    assert document["per_edge_weights"][1]["weight"] == "inf"
    assert document["tolerance"] == 1e-9


def test_disconnected_network_warns(capsys, fixture_path):
    code, out, err = run(capsys, "bound", "--input", fixture_path("disconnected"))
    assert code == EXIT_OK
    assert out.startswith("bound: 0.000 bits per network use")
    assert "trivially zero" in err


def test_methods_give_identical_json(capsys, fixture_path):
    documents = []
    for method in ("brute", "maxflow"):
        code, out, _ = run(capsys, "bound", "--input", fixture_path("diamond"), "--format", "json", "--method", method)
        assert code == EXIT_OK
        documents.append(out)
    assert documents[0].replace('"method": "brute_force"', '"method": "max_flow"') == documents[1]


def test_per_sender(capsys, fixture_path):
    code, out, _ = run(capsys, "per-sender", "--input", fixture_path("two_senders"), "--format", "json")
    assert code == EXIT_OK
    bounds = {row["sender"]: row["bound"] for row in json.loads(out)}
    assert bounds == {"a1": 8.0, "a2": pytest.approx(0.152003093445)}

    code, out, _ = run(capsys, "bound", "--input", fixture_path("two_senders"), "--per-sender")
    assert code == EXIT_OK
    assert "sender a2: 0.1520 bits per network use (side A: a2)" in out


def test_weights(capsys, fixture_path):
    code, out, _ = run(capsys, "weights", "--input", fixture_path("mixed"), "--format", "json")
    assert code == EXIT_OK
    rows = json.loads(out)
    assert [row["channel"]["kind"] for row in rows] == ["pure_loss", "ideal", "dephasing", "custom"]
    assert rows[0]["weight"] == 2.0
    assert rows[0]["provenance"] == "closed_form_paper"
    assert rows[3] == {"u": "r", "v": "b2", "index": 3, "channel": {"kind": "custom", "w": 0.42}, "weight": 0.42,
                       "distillable": False, "provenance": "custom"}

    code, out, _ = run(capsys, "weights", "--input", fixture_path("mixed"))
    assert code == EXIT_OK
    assert "pure_loss(0.75)" in out


@pytest.mark.parametrize("channel, covariant", [
    ('{"kind": "dephasing", "p": 0.3}', True),
    ('{"kind": "pauli", "probs": [0.7, 0.1, 0.1, 0.1]}', True),
    ('{"kind": "amplitude_damping", "gamma": 0.5}', False),
])
def test_check_covariance(capsys, channel, covariant):
    code, out, _ = run(capsys, "check-covariance", "--channel", channel, "--format", "json")
    assert code == EXIT_OK
    document = json.loads(out)
    assert document["weyl_covariant"] is covariant
    assert len(document["residuals"]) == 4
    if covariant:
        assert all(residual <= 1e-12 for residual in document["residuals"])


def test_check_covariance_from_file(capsys, tmp_path):
    path = tmp_path / "channel.json"
    path.write_text('{"kind": "kraus", "operators": [[[1, 0], [0, -1]]]}')
    code, out, _ = run(capsys, "check-covariance", "--input", str(path))
    assert code == EXIT_OK
    assert out.startswith("Weyl-covariant: yes")


@pytest.mark.parametrize("channel", ['{"kind": "pure_loss", "eta": 0.5}', '{"kind": "dephasing", "p": 2}', '{"kind'])
def test_check_covariance_rejects(capsys, channel):
    code, _, err = run(capsys, "check-covariance", "--channel", channel)
    assert code == EXIT_VALIDATION
    assert err.startswith("ERROR: ")


def test_finite_size(capsys):
    code, out, _ = run(capsys, "finite-size", "--epsilon", "0.01", "--n", "1000000", "--alpha-n", "2",
                       "--format", "json")
    assert code == EXIT_OK
    document = json.loads(out)
    assert document["per_use"] == pytest.approx(0.080000161587, abs=1e-9)
    assert document["log2_dim"] == 2000000.0

    code, _, err = run(capsys, "finite-size", "--epsilon", "1.5", "--n", "10", "--log2-dim", "1")
    assert code == EXIT_VALIDATION
    assert "epsilon must lie in [0,1)" in err


def test_export_dot(capsys, fixture_path):
    code, out, _ = run(capsys, "export-dot", "--input", fixture_path("star"), "--with-bound")
    assert code == EXIT_OK
    assert out.startswith('graph "qnet" {\n')
    assert '"a" -- "r" [label="pure_loss(0.75) | w=2.000", style=dashed];' in out
    assert '"r" -- "b1" [label="ideal() | w=inf"];' in out

    _, again, _ = run(capsys, "export-dot", "--input", fixture_path("star"), "--with-bound")
    assert again == out


def test_exit_codes(capsys, fixture_path, tmp_path, monkeypatch):
    code, _, err = run(capsys, "bound", "--input", str(tmp_path / "missing.json"))
    assert code == EXIT_IO
    assert "missing.json" in err

    code, _, err = run(capsys, "bound", "--input", fixture_path("invalid_disjoint"))
    assert code == EXIT_VALIDATION
    assert "senders and receivers must be disjoint" in err

    malformed = tmp_path / "malformed.json"
    malformed.write_bytes(b'{"nodes": [')
    code, _, err = run(capsys, "bound", "--input", str(malformed))
    assert code == EXIT_VALIDATION
    assert "line 1 column 12: malformed JSON" in err

    monkeypatch.setenv("QNET_MAX_FREE_NODES", "0")
    code, _, err = run(capsys, "bound", "--input", fixture_path("diamond"), "--method", "brute")
    assert code == EXIT_CAPACITY
    assert "use the max-flow method" in err
    assert run(capsys, "bound", "--input", fixture_path("diamond"))[0] == EXIT_OK
    assert run(capsys, "bound", "--input", fixture_path("diamond"), "--method", "maxflow")[0] == EXIT_OK


def test_parser_rejects_bad_options(capsys):
    parser = build_parser()
    for argv in (["bound"], ["bound", "--input", "x", "--tolerance", "0"], ["bound", "--input", "x", "--jobs", "0"],
                 ["bound", "--input", "x", "--method", "simplex"]):
        with pytest.raises(SystemExit):
            parser.parse_args(argv)
