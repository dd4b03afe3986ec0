import numpy as np
import pytest

from knotcert.fpgroups import PASS, abelianization, builtin_groups, find_finite_quotient, is_cyclic_of_order, word
from knotcert.lcurve import (
    DegenerateLevelSet,
    GeneticNestModel,
    InvalidConfig,
    NestConfig,
    ResolutionTooCoarse,
    default_window,
    hemisphere_relation,
    nest_presentation,
    nori_abelian_guaranteed,
    oval_svg,
    perturbed_quartic_field,
    x9_ovals,
)

from oracles import sign_region_counts


def test_nest_config_validation():
    with pytest.raises(InvalidConfig):
        NestConfig(3)  # no annular region
    with pytest.raises(InvalidConfig):
        NestConfig(2)
    with pytest.raises(InvalidConfig):
        NestConfig(6, membrane_index=3)  # k - 1 = 2
    with pytest.raises(InvalidConfig):
        NestConfig(6, membrane_index=1, punctured={1})
    with pytest.raises(InvalidConfig):
        NestConfig(6, membrane_index=1, punctured={4})  # regions go up to k = 3
    config = NestConfig.max_punctured(8)
    assert config.punctured == frozenset({0, 2, 3, 4})
    assert config.oval_count == 4


def test_nest_presentation_examples():
    p5 = nest_presentation(NestConfig(5, 1, {0, 2}))
    assert [str(r) for r in p5.relators] == ["a^5 b^5", "a^5", "b^5", "a^3 b^2", "b^3 a^2"]
    p6 = nest_presentation(NestConfig(6, 1, {0, 2, 3}))
    assert [str(r) for r in p6.relators] == [
        "a^6 b^6", "a^6", "b^6", "a^4 b^2", "b^4 a^2", "a^3 b^3", "b^3 a^3",
    ]
    p4 = nest_presentation(NestConfig(4, 1, {0, 2}))
    assert [str(r) for r in p4.relators] == ["a^4 b^4", "a^4", "b^4", "a^2 b^2", "b^2 a^2"]


def test_hemisphere_relation_examples():
    assert hemisphere_relation(5, 0) == (word("b^5"), word("a^5"))
    assert hemisphere_relation(6, 3) == (word("a^3 b^3"),)
    assert hemisphere_relation(7, 2) == (word("a^2 b^5"), word("a^5 b^2"))
    with pytest.raises(InvalidConfig):
        hemisphere_relation(5, 6)


def test_hemisphere_relation_symmetry():
    for d in range(2, 10):
        for i in range(d + 1):
            a = hemisphere_relation(d, i)
            b = hemisphere_relation(d, d - i)
            assert set(a) == set(b)


def test_genetic_nest_model():
    model = GeneticNestModel(7)
    assert model.component_sizes == (7, 7)
    for i in range(8):
        (a1, b1), (a2, b2) = model.hemisphere_split(i)
        assert a1 + b1 == 7 and a2 + b2 == 7
        assert (a1, b1) == (b2, a2)
    assert model.relators_for_puncture(0) == hemisphere_relation(7, 0)
    with pytest.raises(InvalidConfig):
        GeneticNestModel(1)


def test_bare_nest_abelianization():
    for d in range(4, 13):
        bare = nest_presentation(NestConfig(d, 1, frozenset()))
        assert abelianization(bare) == [d, 0]
    # degrees 2 and 3 have no valid membrane, so build the presentation directly
    from knotcert.fpgroups import Presentation

    for d in (2, 3):
        assert abelianization(Presentation(2, (word(f"a^{d} b^{d}"),))) == [d, 0]


def test_cyclic_certification_for_all_small_degrees():
    for d in range(5, 13):
        pres = nest_presentation(NestConfig.max_punctured(d))
        assert is_cyclic_of_order(pres, d).verdict == PASS


def test_quartic_quotient():
    pres = nest_presentation(NestConfig.max_punctured(4))
    hom = find_finite_quotient(pres, builtin_groups()["Q8"])
    assert hom is not None and hom.surjective


def test_nori_predicate():
    assert nori_abelian_guaranteed(25, ["X9"])
    assert not nori_abelian_guaranteed(16, ["X9"])
    assert not nori_abelian_guaranteed(25, ["X9", "Node"])
    assert not nori_abelian_guaranteed(25, [])


def test_x9_ovals_default_model():
    report = x9_ovals(0.01, 1e-7, resolution=256)
    assert report.component_count == 2
    assert report.open_chains == 0
    assert report.nested_pair()
    # outer oval tracks x^2 + y^2 = 4 eps, inner tracks x^2 + 2 y^2 = eps
    outer, inner = report.components
    for x, y in outer:
        assert abs(x * x + y * y - 0.04) < 0.004
    for x, y in inner:
        assert abs(x * x + 2 * y * y - 0.01) < 0.002
    assert report.delta_threshold == pytest.approx(1e-6)


def test_x9_component_count_matches_flood_fill_oracle():
    eps, delta, res = 0.01, 1e-7, 256
    xmin, xmax, ymin, ymax = default_window(eps)
    xs = np.linspace(xmin, xmax, res + 1)
    ys = np.linspace(ymin, ymax, res + 1)
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    values = perturbed_quartic_field(gx, gy, eps, delta)
    negative_regions, positive_regions = sign_region_counts(values)
    # one negative annulus between two positive regions: two boundary curves
    assert negative_regions == 1
    assert positive_regions == 2
    report = x9_ovals(eps, delta, resolution=res)
    assert report.component_count == negative_regions + positive_regions - 1


def test_x9_stability_under_resolution_doubling():
    reports = [x9_ovals(0.01, 1e-7, resolution=r) for r in (256, 512)]
    assert [r.component_count for r in reports] == [2, 2]
    assert [r.nesting for r in reports] == [((), (0,)), ((), (0,))]


def test_x9_far_window_is_empty():
    report = x9_ovals(0.01, 1e-7, window=(0.5, 0.6, 0.5, 0.6), resolution=64)
    assert report.component_count == 0
    assert not report.nested_pair()


def test_x9_window_slicing_curve_yields_open_chains():
    report = x9_ovals(0.01, 1e-7, window=(0.0, 0.3, 0.0, 0.3), resolution=128)
    assert report.open_chains > 0
    assert report.component_count == 0


def test_x9_parameter_validation():
    with pytest.raises(ValueError):
        x9_ovals(0.01, 0.0)
    with pytest.raises(ValueError):
        x9_ovals(0.01, -1e-9)
    with pytest.raises(ValueError):
        x9_ovals(0.01, 1e-3)  # above epsilon^2 / 100
    with pytest.raises(ValueError):
        x9_ovals(-0.01, 1e-9)
    with pytest.raises(ResolutionTooCoarse):
        x9_ovals(0.01, 1e-7, resolution=16)


def test_x9_degenerate_grid_raises_after_retries(monkeypatch):
    import knotcert.lcurve as lcurve

    monkeypatch.setattr(
        lcurve, "perturbed_quartic_field", lambda x, y, e, d: np.zeros_like(np.asarray(x), dtype=float)
    )
    with pytest.raises(DegenerateLevelSet):
        lcurve.x9_ovals(0.01, 1e-7, resolution=64)


def test_x9_report_json_and_svg():
    report = x9_ovals(0.01, 1e-7, resolution=128)
    data = report.to_json_dict()
    assert data["component_count"] == 2
    assert data["nested_pair"] is True
    assert len(data["components"]) == 2
    slim = report.to_json_dict(include_chains=False)
    assert "components" not in slim
    svg = oval_svg(report)
    assert svg.startswith("<svg") and svg.count("<polygon") == 2


def test_containment_is_strict_and_ordered():
    report = x9_ovals(0.01, 1e-7, resolution=128)
    outer, inner = report.components
    assert abs(_area(outer)) > abs(_area(inner))
    assert report.nesting == ((), (0,))


def _area(poly):
    total = 0.0
    for k in range(len(poly)):
        x1, y1 = poly[k]
        x2, y2 = poly[(k + 1) % len(poly)]
        total += x1 * y2 - x2 * y1
    return 0.5 * total
