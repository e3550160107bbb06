import numpy as np
import pytest
from fractions import Fraction

import hypergroups as hg
from hypergroups import structure as st
from hypergroups import burnside as bn
from hypergroups.builders import catalog, class_hypergroup, group_ring, rep_ring
from hypergroups.errors import NotAbelian, NotPositive
from conftest import s3_indices


def test_generated_sub_examples(ising_ring, s3_rep):
    one = hg.basis_element(ising_ring, 0)
    assert st.generated_sub(ising_ring, one).indices == (0,)
    rho = hg.basis_element(ising_ring, 2)
    assert st.generated_sub(ising_ring, rho).indices == (0, 1, 2)
    s, _ = s3_indices(s3_rep)
    assert st.generated_sub(s3_rep, hg.basis_element(s3_rep, s)).indices == (0, s)


def test_generated_sub_rejects_negative(ising_ring):
    with pytest.raises(NotPositive):
        st.generated_sub(ising_ring, hg.Element((1, -1, 0)))


def test_kernel_of_character(ising_ring, ising_table, s3_rep, s3_table):
    assert st.kernel_of_character(
        ising_ring, ising_table, ising_table.fp_index
    ).indices == (0, 1, 2)
    s, t = s3_indices(s3_rep)
    sign_col = next(
        j
        for j in range(3)
        if abs(s3_table.values[s, j] - 1) < 1e-8
        and abs(s3_table.values[t, j] + 1) < 1e-8
    )
    assert st.kernel_of_character(s3_rep, s3_table, sign_col).indices == (0, s)
    zero_col = next(j for j in range(3) if abs(s3_table.values[t, j]) < 1e-8)
    assert st.kernel_of_character(s3_rep, s3_table, zero_col).indices == (0,)


def test_kernel_and_center_of_element(ising_ring, ising_table, s3_rep, s3_table):
    one = hg.basis_element(ising_ring, 0)
    assert st.kernel_of_element(ising_ring, ising_table, one) == frozenset({0, 1, 2})
    _, t = s3_indices(s3_rep)
    assert st.kernel_of_element(
        s3_rep, s3_table, hg.basis_element(s3_rep, t)
    ) == frozenset({s3_table.fp_index})
    center = st.center_of_element(ising_ring, ising_table, 2)
    # |mu(rho)| = sqrt(2) for the two grouplike characters
    assert center == frozenset(bn.grouplike_characters(ising_ring, ising_table))


def test_adjoint_examples(ising_ring, ising_table, s3_rep, s3_table):
    z5 = group_ring(catalog("C5"))
    assert st.adjoint(z5, hg.character_table(z5)).indices == (0,)
    assert st.adjoint(ising_ring, ising_table).indices == (0, 1)
    assert st.adjoint(s3_rep, s3_table).indices == (0, 1, 2)


def test_support_examples(ising_ring, ising_table):
    whole = st.SubHypergroup((0, 1, 2), ising_ring)
    assert st.support(ising_ring, ising_table, whole) == frozenset(
        {ising_table.fp_index}
    )
    trivial = st.SubHypergroup((0,), ising_ring)
    assert st.support(ising_ring, ising_table, trivial) == frozenset({0, 1, 2})
    sub = st.SubHypergroup((0, 1), ising_ring)
    assert st.support(ising_ring, ising_table, sub) == frozenset(
        bn.grouplike_characters(ising_ring, ising_table)
    )


def test_universal_grading(ising_ring, ising_table, s3_rep, s3_table, q8_rep, q8_table):
    g = st.universal_grading(ising_ring, ising_table)
    assert g.group_order == 2 and g.iso_class == (2,)
    assert g.components == ((0, 1), (2,))
    g = st.universal_grading(s3_rep, s3_table)
    assert g.group_order == 1
    g = st.universal_grading(q8_rep, q8_table)
    assert g.group_order == 2  # |Z(Q8)| = 2


def test_grading_matches_center_for_catalog():
    from hypergroups.builders import catalog_names

    for name in catalog_names():
        grp = catalog(name)
        ring = rep_ring(grp)
        table = hg.character_table(ring)
        g = st.universal_grading(ring, table)
        assert g.group_order == len(grp.center()), name
        assert g.group_order == len(bn.grouplike_characters(ring, table)), name


def test_perp_examples(ising_ring, ising_table):
    trivial = st.SubHypergroup((0,), ising_ring)
    assert st.perp(ising_ring, ising_table, trivial) == frozenset({0, 1, 2})
    whole = st.SubHypergroup((0, 1, 2), ising_ring)
    assert st.perp(ising_ring, ising_table, whole) == frozenset({ising_table.fp_index})
    sub = st.SubHypergroup((0, 1), ising_ring)
    assert st.perp(ising_ring, ising_table, sub) == frozenset(
        bn.grouplike_characters(ising_ring, ising_table)
    )


def test_grouplike_char_perp_is_adjoint(corpus_with_tables):
    # Cor 7.16: G(H-hat)-perp = H_ad
    for ring, table in corpus_with_tables:
        glc = bn.grouplike_characters(ring, table)
        ad = st.adjoint(ring, table)
        assert st.perp_characters(ring, table, glc) == frozenset(ad.indices), ring.name


def test_quotient_trivial_is_identity(s3_rep, s3_table):
    q, classes = st.quotient(s3_rep, st.SubHypergroup((0,), s3_rep), s3_table)
    assert q.rank == s3_rep.rank
    # normalized version of the ring itself
    assert q.flags.normalized


def test_quotient_z4_by_order2():
    z4 = group_ring(catalog("C4"))
    # the order-2 subgroup is generated by g^2; find it from the tensor
    sq = next(
        i for i in range(1, 4) if z4.tensor[i, i, 0] == 1 and i == z4.involution[i]
    )
    q, classes = st.quotient(z4, st.SubHypergroup((0, sq), z4))
    assert q.rank == 2
    assert q.tensor[1, 1, 0] == 1  # Z[Z2]


def test_quotient_s3_example(s3_rep, s3_table):
    s, t = s3_indices(s3_rep)
    q, classes = st.quotient(s3_rep, st.SubHypergroup((0, s), s3_rep), s3_table)
    assert q.rank == 2
    assert [c for c in classes] == [(0, s), (t,)]
    # normalized class tensor [t][t] = 1/2 [1] + 1/2 [t]
    assert q.tensor[1, 1, 0] == Fraction(1, 2)
    assert q.tensor[1, 1, 1] == Fraction(1, 2)
    # raw Eq (7.5) sums on the un-normalized ring: 2 on [1], 1 on [t]
    tt = s3_rep.tensor[t, t]
    assert tt[0] + tt[s] == 2 and tt[t] == 1


def test_quotient_rejects_nonabelian():
    ring = group_ring(catalog("S3"))
    with pytest.raises(NotAbelian):
        st.quotient(ring, st.SubHypergroup((0,), ring))


def test_commutator_examples(ising_ring, s3_rep):
    # S = {0}: commutator = grouplikes
    z4 = group_ring(catalog("C4"))
    assert st.commutator_sub(z4, st.SubHypergroup((0,), z4)).indices == (0, 1, 2, 3)
    sub = st.SubHypergroup((0, 1), ising_ring)
    assert st.commutator_sub(ising_ring, sub).indices == (0, 1, 2)
    s, _ = s3_indices(s3_rep)
    assert st.commutator_sub(s3_rep, st.SubHypergroup((0, s), s3_rep)).indices == (0, s)


def test_central_series(ising_ring, s3_rep):
    z6 = group_ring(catalog("C6"))
    assert st.central_series(z6).nilpotency_class == 1
    cs = st.central_series(ising_ring)
    assert cs.nilpotency_class == 2
    assert [s.indices for s in cs.upper] == [(0, 1, 2), (0, 1), (0,)]
    assert [s.indices for s in cs.lower] == [(0,), (0, 1), (0, 1, 2)]
    assert st.central_series(s3_rep).nilpotency_class is None


def test_nilpotency_matches_group_nilpotency():
    from hypergroups.builders import catalog_names
    from conftest import NILPOTENT_CATALOG

    for name in catalog_names():
        ring = rep_ring(catalog(name))
        got = st.is_nilpotent(ring) is not None
        assert got == (name in NILPOTENT_CATALOG), name


def test_dual_nilpotency_class_equal(corpus_with_tables):
    # Theorem: H nilpotent iff dual nilpotent, same class (dualizable corpus rings)
    for ring, table in corpus_with_tables:
        dd = hg.dual_hypergroup(ring, table)
        if not hg.dual_flags(dd).rn:
            continue
        assert st.is_nilpotent(ring) == st.is_nilpotent(dd.base), ring.name


def test_brauer_criterion(corpus_with_tables):
    # <x> = H iff ker(x) = {FP}; lambda_<x> = sum F_j over ker(x)
    for ring, table in corpus_with_tables[:14]:
        if table.fp_index is None:
            continue
        for i in range(ring.rank):
            x = hg.basis_element(ring, i)
            gen = st.generated_sub(ring, x)
            ker = st.kernel_of_element(ring, table, x)
            assert gen.is_whole == (ker == frozenset({table.fp_index})), ring.name
            js = st.support(ring, table, gen)
            assert js == ker, (ring.name, i)


def test_p_squared_generates_adjoint(corpus_with_tables):
    # <P^2> = H_ad and H_ad <= <P>
    for ring, table in corpus_with_tables:
        if table.fp_index is None:
            continue
        P = bn.product_P(ring, table)
        P2 = hg.multiply(ring, P, P)
        ad = set(st.adjoint(ring, table).indices)
        assert set(st.generated_sub(ring, P2).indices) == ad, ring.name
        assert ad <= set(st.generated_sub(ring, P).indices), ring.name


def test_join_support_law(corpus_with_tables):
    # J_{S v T} = J_S n J_T for rings with few sub-hypergroups
    for ring, table in corpus_with_tables:
        subs = st.all_sub_hypergroups(ring)
        if len(subs) > 8:
            continue
        for s1 in subs:
            for s2 in subs:
                join = st.SubHypergroup(
                    st.closure(ring, set(s1.indices) | set(s2.indices)), ring
                )
                lhs = st.support(ring, table, join)
                rhs = st.support(ring, table, s1) & st.support(ring, table, s2)
                assert lhs == rhs, (ring.name, s1.indices, s2.indices)


def test_grouplike_constituent_law(corpus_with_tables):
    # g constituent of x x* iff g x = d_g x (Lemma on grouplike constituents)
    for ring, table in corpus_with_tables[:16]:
        if table.fp_index is None:
            continue
        thr = st._support_threshold(ring, table.tol)
        gl = bn.grouplike_elements(ring, table)
        d = table.fp_dims()
        inv = ring.involution
        for g in gl:
            for i in range(ring.rank):
                lhs = g in st.product_support(ring, i, inv[i], thr)
                gx = hg.multiply(ring, hg.basis_element(ring, g), hg.basis_element(ring, i))
                target = np.zeros(ring.rank)
                target[i] = d[g]
                rhs = np.abs(gx.float_coords() - target).max() < 1e-8
                assert lhs == rhs, (ring.name, g, i)


def test_adjoint_trivial_iff_dual_pointed(corpus_with_tables):
    # H_ad = C iff dual pointed; H_ad = H iff dual perfect
    for ring, table in corpus_with_tables:
        ad = st.adjoint(ring, table)
        glc = bn.grouplike_characters(ring, table)
        assert ad.is_trivial == (len(glc) == ring.rank), ring.name
        assert ad.is_whole == (len(glc) == 1), ring.name


def test_quotient_vanishing_lift():
    # a class vanishing in H//S lifts to a vanishing element of H
    ring = rep_ring(catalog("S4"))
    table = hg.character_table(ring)
    # S = {1, sgn}: the grouplike elements
    gl = bn.grouplike_elements(ring, table)
    q, classes = st.quotient(ring, st.SubHypergroup(gl, ring), table)
    qtable = hg.character_table(q)
    qvanish = bn.vanishing_elements(q, qtable)
    assert qvanish  # the quotient does have a vanishing class here
    vanish = set(bn.vanishing_elements(ring, table))
    for lbl in qvanish:
        for member in classes[lbl]:
            assert member in vanish


def test_restrict_roundtrip(ising_ring):
    sub, back = st.restrict(ising_ring, (0, 1))
    assert sub.rank == 2 and back == [0, 1]
    assert sub.flags.fusion_ring
