"""Smoke tests for the python bindings: a few headline values recomputed
through the extension module."""

import os

import pytest

import _homnalg as hn

SIMPLE = """
algebra K {
  arity 3 ;
  dim 3 ;
  basis a1 a2 a3 ;
  bracket [a2,a2,a2] = a1 ;
  bracket [a3,a2,a2] = a3 ;
  bracket [a3,a3,a3] = a2 ;
  alpha zero ;
}
"""


def test_parse_and_validate():
    doc = hn.parse(SIMPLE)
    assert doc.algebra_names == ["K"]
    k = doc.algebra("K")
    assert k.valid
    assert k.arity == 3
    assert k.dim == 3
    assert k.is_perfect()
    assert not k.is_hom_lie()


def test_center_and_homology():
    k = hn.parse(SIMPLE).algebra("K")
    assert k.center() == ["a1"]
    assert k.hl0_dim() == 0
    assert k.hl1_dim() == 24
    assert k.uce_dims() == (27, 24)
    assert not k.centrally_closed()


def test_catalog_round_trip():
    names = hn.catalog_names()
    assert "sec5.L" in names
    twisted = hn.catalog_algebra("sec5.L")
    assert twisted.is_perfect()
    assert twisted.is_hom_lie()
    assert twisted.centrally_closed()
    assert twisted.tensor_square_dim() == 4
    assert hn.catalog_run("ex52.f")
    # printing and re-parsing preserves the structure
    doc = hn.parse(twisted.to_hna())
    again = doc.algebra(doc.algebra_names[0])
    assert again.valid
    assert again.hl1_dim() == 0


def test_morphism_classification():
    samples = os.environ.get("HOMNALG_SAMPLES")
    if not samples:
        pytest.skip("HOMNALG_SAMPLES not set")
    doc = hn.parse_file(os.path.join(samples, "ex37.hna"))
    assert doc.morphism("pi_rho").classify() == "alpha-central"
    assert doc.morphism("pi").classify() == "central"
    assert doc.morphism("pi_rho").kernel_dim() == 2


def test_parse_error_positions():
    with pytest.raises(hn.HnaParseError):
        hn.parse("algebra X { arity 3 ; dim 1 ; basis a ; bracket [a,a] = a ; alpha zero ; }")
