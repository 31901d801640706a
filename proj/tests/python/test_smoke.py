import json
import math
import os
import subprocess

import pytest

import stabkit

A3 = json.dumps(
    {
        "vertices": [1, 2, 3],
        "arrows": [
            {"id": "a", "src": 1, "tgt": 2},
            {"id": "b", "src": 2, "tgt": 3},
        ],
        "potential": [],
    }
)

A2 = json.dumps(
    {"vertices": [1, 2], "arrows": [{"id": "a", "src": 1, "tgt": 2}], "potential": []}
)

A2_HEART = json.dumps({"qp": json.loads(A2), "classes": [[1, 0], [0, 1]]})

E_REP = json.dumps({"qp": json.loads(A2), "p": 2, "dim": [1, 1], "mats": {"a": [[1]]}})

CHARGE = json.dumps(
    {"backend": "exact", "Z": [{"re": "0", "im": "1"}, {"re": "-1", "im": "1"}]}
)


def test_mutation_gives_the_three_cycle():
    out = json.loads(stabkit.mutate(A3, 2))
    assert len(out["arrows"]) == 3
    assert len(out["potential"]) == 1
    assert len(out["potential"][0]["cycle"]) == 3


def test_mutation_rejects_unknown_vertex():
    with pytest.raises(stabkit.DomainError):
        stabkit.mutate(A3, 99)


def test_hn_filtration_of_the_extension():
    factors = stabkit.hn_filtration(E_REP, CHARGE)
    assert [f[0] for f in factors] == [[0, 1], [1, 0]]
    assert factors[0][1] == pytest.approx(0.75)
    assert factors == stabkit.hn_oracle(E_REP, CHARGE)


def test_pentagon_exchange_graph():
    g = stabkit.exchange_graph(A2_HEART, depth=-1, intermediate_only=True)
    assert len(g["vertices"]) == 5
    assert sum(1 for e in g["edges"] if e[3] == "fwd") == 5


def test_chamber_labels():
    assert stabkit.chamber_of("1", "1") == "H0"
    assert stabkit.chamber_of("-1", "2") == "H1"
    assert stabkit.chamber_of("1", "0") == "wall:S2"


def test_surface_side():
    assert len(stabkit.enumerate_triangulations(5)) == 5
    assert stabkit.compare_exchange_graphs(5) == "isomorphic: 5-cycle"
    assert stabkit.flip(5, [(0, 2), (0, 3)], (0, 3)) == [(0, 2), (2, 4)]


def test_periods():
    p = stabkit.period("z^2-1", 0, 1)
    assert abs(abs(p) - math.pi / 2) < 1e-10
    assert stabkit.genericity_proxy("z^3-z") is False


def test_euler_form():
    assert stabkit.euler_form_cy3(A2, 1, 2) == -1


def test_cli_version():
    cli = os.environ.get("STABKIT_CLI")
    if not cli:
        pytest.skip("STABKIT_CLI not set")
    out = subprocess.run([cli, "--version"], capture_output=True, text=True)
    assert out.returncode == 0
    assert "stabkit" in out.stdout
