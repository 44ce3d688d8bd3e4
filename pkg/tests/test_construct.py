import math

import pytest

from steiner.construct import (
    ConstructionError,
    ag_plane_design,
    block_orbit,
    forced_designs,
    mathieu_group,
    netto_extension_design,
    sharpness_check,
    spherical_design,
    witt_design,
    witt_design_via_psl,
)
from steiner.design import params
from steiner.pgl import GroupDescriptor, make_group


@pytest.mark.parametrize("d,b", [(3, 14), (4, 140), (5, 1240)])
def test_ag_planes(d, b):
    D = ag_plane_design(d)
    assert (D.t, D.v, D.k, D.b) == (3, 2**d, 4, b)
    assert D.b == math.comb(2**d, 3) // 4


@pytest.mark.parametrize("q,e,b", [(3, 2, 30), (4, 2, 68), (3, 3, 819)])
def test_spherical(q, e, b):
    D = spherical_design(q, e)
    assert (D.t, D.v, D.k, D.b) == (3, q**e + 1, q + 1, b)
    G = make_group(GroupDescriptor("PGL2", q**e))
    assert sharpness_check(D, G)["flag_transitive"]


@pytest.mark.parametrize("q,b", [(7, 14), (19, 285), (31, 1240)])
def test_netto(q, b):
    D = netto_extension_design(q)
    assert (D.t, D.v, D.k, D.b) == (3, q + 1, 4, b)


def test_construction_errors():
    with pytest.raises(ConstructionError):
        ag_plane_design(2)
    with pytest.raises(ConstructionError):
        spherical_design(6, 2)
    with pytest.raises(ConstructionError):
        spherical_design(3, 1)
    with pytest.raises(ConstructionError):
        netto_extension_design(13)
    with pytest.raises(ConstructionError):
        witt_design_via_psl(19)
    with pytest.raises(ConstructionError):
        witt_design(13)


def test_witt_12():
    D, cert = witt_design_via_psl(11)
    assert D.b == 132 and cert.stabilizer_order == 5
    assert cert.orbit_length * cert.stabilizer_order == 660
    assert params(D) == (132, 66, 30)


def test_witt_24_certificate():
    D, cert = witt_design_via_psl(23)
    assert D.b == 759
    assert cert.stabilizer_order == 8
    assert cert.base_block == (0, 1, 2, 4, 5, 7, 12, 22)
    G = make_group(GroupDescriptor("PSL2", 23))
    assert block_orbit(G, cert.base_block) == list(D.blocks)
    assert sharpness_check(D, G) == {"flag_transitive": True, "sharply": True}


@pytest.mark.parametrize("v,b", [(11, 66), (12, 132), (22, 77), (23, 253), (24, 759)])
def test_witt_family(v, b):
    D = witt_design(v)
    assert D.v == v and D.b == b


def test_mathieu_orders():
    assert mathieu_group(12).order() == 95040
    assert mathieu_group(11).order() == 7920


def test_forced_designs():
    G = mathieu_group(12)
    (D,) = forced_designs(G, 5, 6)
    assert D.blocks == witt_design(12).blocks
    assert forced_designs(G, 5, 12) == []
    with pytest.raises(ConstructionError):
        forced_designs(make_group(GroupDescriptor("PSL2", 11)), 5, 6)
