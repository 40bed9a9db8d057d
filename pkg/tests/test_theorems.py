import jsonschema
import pytest

from rek_lab import load_schema
from rek_lab.connectivity import classify, lambda3, validate_witness
from rek_lab.generators import complete, cycle, harary, star, subdivided_complete
from rek_lab.graph import GraphError
from rek_lab.products import strong_product
from rek_lab.theorems import (
    Budget,
    check_theorem,
    lemma25_upper_bound,
    normalize_id,
    predict_lambda2_strong_complete,
    predict_lambda2_strong_cycle,
    predict_lambda3_strong_complete,
    predict_lambda3_strong_cycle,
)

SCHEMA = load_schema("theorem_report")


def test_lambda2_predictions():
    assert predict_lambda2_strong_cycle(5, 5, 2, 2, 4) == 14
    assert predict_lambda2_strong_cycle(4, 6, 3, 3, 3) == 20
    assert predict_lambda2_strong_complete(5, 5, 2, 2, 4) == 20
    assert predict_lambda2_strong_complete(4, 6, 3, 3, 4) == 28


def test_lambda3_predictions():
    assert predict_lambda3_strong_cycle(2, 2, 4) == 18
    assert predict_lambda3_strong_cycle(2, 3, 4) == 20
    assert predict_lambda3_strong_cycle(4, 6, 4) == 36
    assert predict_lambda3_strong_complete(5, 5, 2, 4) == 27
    assert predict_lambda3_strong_complete(3, 3, 2, 4) == 27


def test_lemma25_values_and_cuts():
    b = lemma25_upper_bound(cycle(5), cycle(4))
    assert (b.value, b.from_g, b.from_h) == (24, 24, 30)
    b = lemma25_upper_bound(cycle(5), complete(4))
    assert (b.value, b.from_g, b.from_h) == (32, 32, 45)
    prod = strong_product(cycle(5), complete(4)).graph
    for cut, value in ((b.cut_from_g, 32), (b.cut_from_h, 45)):
        assert cut.value == value and validate_witness(prod, cut, 3)


def test_lemma25_rejects_small_factor():
    with pytest.raises(GraphError):
        lemma25_upper_bound(cycle(5), complete(2))


@pytest.mark.parametrize("tid,g,n,predicted,computed", [
    ("T3.1", cycle(5), 4, 18, 18),
    ("T3.1", subdivided_complete(4, 0), 4, 20, 20),
    ("T3.2", cycle(5), 4, 27, 27),
    ("C3.3", cycle(5), 4, 27, 27),
    ("T1.1", cycle(5), 4, 14, 14),
    ("T1.1", complete(4), 3, 20, 20),
    ("T1.2", cycle(5), 4, 20, 20),
    ("L2.5", cycle(5), 4, 24, 18),
    ("L2.4", cycle(5), 4, 18, 18),
])
def test_confirmed(tid, g, n, predicted, computed):
    rep = check_theorem(tid, g, n)
    assert rep.verdict == "confirmed"
    assert (rep.predicted, rep.computed) == (predicted, computed)
    jsonschema.validate(rep.to_json(), SCHEMA)


def test_c33_classifier_agrees():
    rep = check_theorem("C3.3", cycle(5), 4)
    assert rep.details["lifted_terms_min"] == 32 >= rep.details["xi3_formula"] == 27
    prod = strong_product(cycle(5), complete(4)).graph
    assert classify(prod, "maximally-3-restricted").holds is True


def test_star_gate():
    rep = check_theorem("T3.1", star(5), 4)
    assert rep.verdict == "hypotheses-unmet" and rep.exploratory
    names = dict(rep.hypotheses)
    assert names["G maximally edge-connected"] and not names["delta(G) >= 2"]
    jsonschema.validate(rep.to_json(), SCHEMA)


def test_budget_refusal_is_never_silent():
    rep = check_theorem("T3.2", cycle(5), 4, Budget(oracle=10, flow=15))
    assert rep.verdict == "oracle-too-large" and rep.computed is None
    rep = check_theorem("T3.2", cycle(5), 4, Budget(oracle=10, flow=100))
    assert rep.method == "flow" and rep.verdict == "confirmed"


def test_harary_complete_flow():
    rep = check_theorem("T3.2", harary(3, 6), 4, Budget(oracle=0))
    assert rep.method == "flow" and rep.verdict == "confirmed"
    assert rep.computed == rep.predicted == lambda3(strong_product(harary(3, 6), complete(4)).graph).value


def test_l25_with_explicit_second_factor():
    rep = check_theorem("L2.5", cycle(5), h=complete(4))
    assert rep.verdict == "confirmed" and rep.predicted == 32 and rep.computed == 27
    assert rep.details["lifted_cut_G_valid"] and rep.details["lifted_cut_H_valid"]


def test_l24_on_factor_itself():
    rep = check_theorem("L2.4", cycle(6))
    assert rep.verdict == "confirmed" and rep.computed == 2 <= rep.predicted


def test_ids_and_required_n():
    assert normalize_id(" t3.1 ") == "T3.1"
    with pytest.raises(GraphError):
        normalize_id("T9.9")
    with pytest.raises(GraphError):
        check_theorem("T3.1", cycle(5))
