import pytest

from shiftlab.algebraic import GenericConfig
from shiftlab.checks import CHECKS, run_checks
from shiftlab.corpus import CorpusSpec, gen_corpus
from shiftlab.graph import GraphError, complete_bipartite, cycle_graph, is_bipartite, is_chordal
from shiftlab.plotting import plot_adjacency, plot_profiles, plot_verify_summary
from shiftlab.oracles import kab_exterior_profile, kab_symmetric_profile


def test_corpus_deterministic_and_chordal():
    spec = CorpusSpec("chordal", n=8, count=100, seed=3)
    a, b = gen_corpus(spec), gen_corpus(spec)
    assert a == b and len(a) == 100
    assert all(is_chordal(g) for g in a)
    assert all(is_bipartite(g) for g in gen_corpus(CorpusSpec("bipartite", n=9, count=30, seed=1)))
    assert gen_corpus(CorpusSpec("kab", a=3, b=3)) == [complete_bipartite(3, 3)]
    conn = gen_corpus(CorpusSpec("gnp", n=7, p=0.3, count=20, connected=True))
    from shiftlab.graph import connected_components
    assert all(len(connected_components(g)) == 1 for g in conn)


@pytest.mark.parametrize("spec", [CorpusSpec("gnp", p=1.5), CorpusSpec("gnp", count=0),
                                  CorpusSpec("kab", a=0, b=2), CorpusSpec("nope")])
def test_corpus_invalid(spec):
    with pytest.raises(GraphError):
        gen_corpus(spec)


def test_run_checks_all_pass():
    cfg = GenericConfig(seed=4)
    graphs = gen_corpus(CorpusSpec("chordal", n=7, count=15, seed=2))
    graphs += gen_corpus(CorpusSpec("gnp", n=6, count=10, seed=2))
    graphs += [complete_bipartite(3, 3), complete_bipartite(4, 3), cycle_graph(5)]
    rows = run_checks(graphs, cfg)
    assert [r["check"] for r in rows] == [name for name, _ in CHECKS]
    for r in rows:
        assert r["failed"] == 0, r
        assert r["applicable"] == r["passed"]
    by = {r["check"]: r for r in rows}
    assert by["bipartite-separation"]["applicable"] >= 1  # K_{3,3}
    assert by["chordal-coincidence"]["applicable"] >= 15


def test_figures(tmp_path):
    profs = {"exterior": kab_exterior_profile(3, 3), "symmetric": kab_symmetric_profile(3, 3)}
    p = plot_profiles(profs, tmp_path / "a" / "prof.png")
    assert p.exists() and p.stat().st_size > 0
    from shiftlab.graph import graph_from_profile
    q = plot_adjacency({k: graph_from_profile(v) for k, v in profs.items()}, tmp_path / "adj.png")
    assert q.exists()
    rows = [{"check": "x", "passed": 3, "failed": 1}, {"check": "y", "passed": 0, "failed": 0}]
    assert plot_verify_summary(rows, tmp_path / "v.png").exists()
