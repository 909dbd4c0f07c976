import pytest

from chromind.coloring import validate
from chromind.graphs import Family, FamilySpec, build
from chromind.indices import profile
from chromind.witnesses import (INDICES, VARIANTS, WITNESS_FAMILIES, NoWitness, parse_tables,
                                stated_for, witness)

CASES = [(f, n, v, i) for f in WITNESS_FAMILIES for n in range(4, 14)
         for v in VARIANTS for i in INDICES]


@pytest.mark.parametrize("family,n,variant,index", CASES)
def test_witness_proper_and_matches_stated_table(family, n, variant, index):
    spec = FamilySpec(family, n)
    g = build(spec)
    c = witness(spec, variant, index)
    assert validate(g, c) == []
    table = stated_for(spec, variant, index)
    if table is None:
        pytest.skip("no stated table")
    p = profile(g, c)
    if table.theta is not None:
        assert p.theta == table.theta_at(n)
    eta = table.eta_at(n)
    if eta is not None:
        assert p.nonzero_eta() == eta


def test_flower_even_stated_values():
    spec = FamilySpec(Family.FLOWER, 6)
    p = profile(build(spec), witness(spec, "minus", "m1"))
    assert p.theta == (6, 6, 1)
    assert p.nonzero_eta() == {(1, 2): 12, (1, 3): 6, (2, 3): 6}


def test_plus_is_reversal():
    spec = FamilySpec(Family.SUNFLOWER, 5)
    assert witness(spec, "plus", "m2") == witness(spec, "minus", "m2").reversed()


@pytest.mark.parametrize("args", [
    (FamilySpec(Family.WHEEL, 5), "minus", "m1"),
    (FamilySpec(Family.FLOWER, 3), "minus", "m1"),
    (FamilySpec(Family.FLOWER, 5), "middle", "m1"),
])
def test_no_witness(args):
    with pytest.raises(NoWitness):
        witness(*args)


def test_table_parse_errors():
    with pytest.raises(ValueError, match="line 1"):
        parse_tables("flower minus m1 even theta\n")
    with pytest.raises(ValueError, match="eta pair"):
        parse_tables("flower minus m1 even eta21 n\n")
