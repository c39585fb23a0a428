import _tropgon as t

CUBE_EDGES = [
    (0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3),
    (2, 6), (3, 7), (4, 5), (4, 6), (5, 7), (6, 7),
]


def test_analyze_upsilon():
    inv = t.analyze([(-2, -2), (2, 0), (0, 2)])
    assert inv["genus"] == 4
    assert inv["boundary_points"] == 6
    assert inv["lattice_width"] == 4
    assert inv["expected_gonality"] == 3
    assert inv["maximal"]
    assert not inv["hyperelliptic"]


def test_relax():
    assert t.relax([(0, 0), (1, 0), (0, 1)]) == [(-1, -1), (3, -1), (-1, 3)]
    assert t.relax([(0, 0), (3, 1), (0, 1)]) is None


def test_moduli_dimensions():
    assert t.moduli_dim([(-2, -2), (2, 0), (0, 2)]) == 7
    assert t.upper_bound_U(7, 4) == (50, 3)
    assert t.cut_penalty(2, 2, 5) == (-3, 2)
    assert t.moduli_dim(t.witness_d4(7)) == 16
    assert t.moduli_dim(t.witness_d5(12)) == 24
    assert t.hyperelliptic_locus_dim(5) == 9


def test_enumeration_and_table():
    corpus = t.enumerate_maximal(5)
    assert len(corpus) == 4
    assert sorted(e["moduli_dim"] for e in corpus) == [9, 10, 10, 11]
    assert t.table_row(5) == {2: 9, 3: 11, 4: 10}


def test_beehive_and_skeleton():
    points, cells = t.build_beehive([(0, 0), (4, 0), (0, 4)])
    assert len(cells) == 16  # 2 A(P) unimodular triangles
    n, edges = t.skeleton_of([(0, 0), (4, 0), (0, 4)])
    assert t.betti(n, edges) == 3


def test_gonality_and_scrambles():
    assert t.gonality(8, CUBE_EDGES) == 4
    assert t.gonality(5, [(i, (i + 1) % 5) for i in range(5)]) == 2
    assert t.scramble_order(8, CUBE_EDGES, [[0, 4], [1, 5], [2, 6], [3, 7]]) == 4


def test_certificates():
    cert = t.certify([(0, 0), (15, 0), (15, 3), (0, 3)])
    assert cert["exact"]
    assert cert["lower"] == 3
    assert "crystal" in cert["lower_witness"]

    cert5 = t.certify([(-2, -2), (2, 0), (0, 2)])
    assert cert5["exact"]
    assert cert5["lower"] == 3


def test_truncation_and_crystal():
    tr = t.truncate(t.witness_d5(12))
    assert tr["d"] == 5
    assert tr["a"] == 2 and tr["b"] == 3
    assert sorted(tr["cuts"]) == [(2, 2), (3, 3)]
    assert t.find_crystal([(0, 0), (6, 0), (6, 3), (0, 3)], 3) == 1
    assert t.find_crystal([(0, 0), (4, 0), (4, 3), (0, 3)], 3) is None
