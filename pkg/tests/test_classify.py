import json
from fractions import Fraction

import jsonschema

from reinhardt import (classify_ainf, classify_all, classify_hinf, classify_hinf_k,
                       classify_l2, classify_lp_ak, log_polyhedron, parse_spec)
from reinhardt.classify import REPORT_SCHEMA
from reinhardt.cones import approach_certificate, recession_contains
from reinhardt.scalars import sign_of


def test_hartogs_full_report(hartogs):
    report = classify_all(hartogs)
    v = report.verdicts
    assert v["hinf"].value == "yes"
    assert v["l2"].value == "yes"
    assert v["lp_ak"].value == "yes"
    assert v["ainf"].value == "no"
    assert v["ainf"].evidence["failing_epsilon"] == [1, 1]
    assert v["hinf_k"].value == "yes" and v["hinf_k"].evidence["m"] == 2
    assert report.flags == {"fat": "by-representation", "bounded": True,
                            "finite_volume": True, "proper_subset": True}


def test_gallery_verdicts(annulus, disc_times_plane, multiplicative_strip,
                          irrational_slope, polydisc):
    assert classify_ainf(annulus).value == "yes"
    dtp = classify_all(disc_times_plane).verdicts
    assert dtp["hinf_k"].value == "yes" and dtp["hinf_k"].evidence["m"] == 1
    assert dtp["l2"].value == "no"
    assert dtp["ainf"].value == "yes"
    ms = classify_all(multiplicative_strip).verdicts
    assert ms["hinf"].value == "yes"
    assert ms["l2"].value == "no"
    assert ms["hinf_k"].value == "no"
    irr = classify_all(irrational_slope).verdicts
    assert irr["hinf"].value == "no"
    assert irr["ainf"].value == "not-applicable"
    assert classify_ainf(polydisc).value == "yes"  # no negative exponents anywhere


def test_whole_space_degenerate():
    whole = parse_spec('{"n":2,"constraints":[]}')
    v = classify_all(whole).verdicts
    assert v["hinf"].value == "yes"          # lineality R^n is rational type
    assert v["l2"].value == "not-applicable"
    assert v["lp_ak"].value == "no"          # not a proper subset
    assert v["ainf"].value == "yes"          # vacuous: no negative exponents
    assert v["hinf_k"].value == "yes" and v["hinf_k"].evidence["m"] == 0


def test_every_no_carries_reverifiable_evidence(hartogs, multiplicative_strip,
                                                irrational_slope):
    # ainf refusal: the epsilon set must re-pass the approach LP and the ray
    # must be a recession direction with components <= -1 on the set
    v = classify_ainf(hartogs)
    eps = v.evidence["failing_epsilon"]
    coords = frozenset(j for j, e in enumerate(eps) if e)
    poly = log_polyhedron(hartogs)
    ray = approach_certificate(poly, coords)
    assert ray is not None
    assert recession_contains(poly, list(ray))
    assert all(sign_of(ray[j] + 1) <= 0 for j in coords)
    # l2 refusal: the lineality vector is a two-sided recession direction
    v2 = classify_l2(multiplicative_strip)
    vec = [Fraction(x) for x in v2.evidence["lineality_vector"]]
    poly2 = log_polyhedron(multiplicative_strip)
    assert recession_contains(poly2, vec) and recession_contains(poly2, [-x for x in vec])
    # hinf refusal: the basis must genuinely miss integer points
    v3 = classify_hinf(irrational_slope)
    assert v3.evidence["integer_rank"] < v3.evidence["lineality_dim"]


def test_permutation_equivariance(hartogs):
    swapped = parse_spec(
        '{"n":2,"constraints":[{"alpha":["-1","1"],"c":"1"},{"alpha":["1","0"],"c":"1"}]}')
    a, b = classify_all(hartogs), classify_all(swapped)
    for key in a.verdicts:
        assert a.verdicts[key].value == b.verdicts[key].value
    assert b.verdicts["ainf"].evidence["failing_epsilon"] == [1, 1]  # symmetric here
    assert a.flags == b.flags


def test_k_uniformity(hartogs):
    for k in (0, 1, 2, 3):
        assert classify_lp_ak(hartogs, k).value == "yes"
        assert classify_hinf_k(hartogs, k).value == "yes"


def test_report_schema_validates(gallery):
    for spec in gallery.values():
        doc = classify_all(spec).to_json_dict()
        jsonschema.validate(doc, REPORT_SCHEMA)
        json.dumps(doc)  # JSON-serialisable all the way down
