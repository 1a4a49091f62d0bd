import json

import numpy as np
import pytest

from igelkit.core.errors import InvalidParameterError, OracleSizeError
from igelkit.core.families import (
    gen_complete_bipartite,
    gen_cycle,
    gen_disjoint_union,
    gen_path,
    gen_petersen,
    gen_prism,
    gen_rook,
    gen_shrikhande,
    gen_star,
)
from igelkit.core.graph import GraphCollection, permute, random_permutation
from igelkit.core.igel import encode_graph
from igelkit.core.survey import EncoderSpec, find_witness, pairwise_compare, run_survey


def test_spec_parsing():
    assert EncoderSpec.parse("igel", "2") == EncoderSpec("igel", alpha=2)
    concat = EncoderSpec.parse("igel", "1,2")
    assert concat.method == "igel_concat"
    assert concat.alphas == (1, 2)
    assert concat.describe_alpha() == [1, 2]
    assert EncoderSpec.parse("wl", "2", wl_max_iters=3) == EncoderSpec("wl", wl_max_iters=3)
    assert EncoderSpec.parse("igel", "1,2", per_vertex=False).per_vertex is False


@pytest.mark.parametrize("method, alpha", [
    ("gamma", "1,2"),
    ("igel", "0"),
    ("igel", "x"),
    ("igel", ""),
    ("sp", "1"),
])
def test_bad_specs(method, alpha):
    with pytest.raises(InvalidParameterError):
        EncoderSpec.parse(method, alpha)


def test_cycle_versus_two_triangles(two_triangles):
    c6 = gen_cycle(6)
    wl = pairwise_compare(c6, two_triangles, EncoderSpec("wl"))
    assert wl.verdict == "equivalent"
    assert wl.distinguished_at is None
    for alpha in (1, 2):
        igel = pairwise_compare(c6, two_triangles, EncoderSpec("igel", alpha=alpha))
        assert igel.verdict == "distinguished"
        assert igel.witness is not None


def test_witness_is_first_differing_entry(two_triangles):
    witness = find_witness(encode_graph(gen_cycle(6), 1), encode_graph(two_triangles, 1))
    assert witness.level == "entry"
    assert witness.entry == (1, 1)
    assert (witness.count_a, witness.count_b) == (12, 0)


def test_wl_reports_round():
    result = pairwise_compare(gen_path(4), gen_star(3), EncoderSpec("wl"))
    assert result.distinguished
    assert result.distinguished_at == 0


def test_gamma_splits_what_igel_cannot():
    k33, prism = gen_complete_bipartite(3, 3), gen_prism(3)
    assert not pairwise_compare(k33, prism, EncoderSpec("igel", alpha=2)).distinguished
    gamma = pairwise_compare(k33, prism, EncoderSpec("gamma", alpha=2))
    assert gamma.distinguished
    assert gamma.witness.entry == (1, 0, 2)
    assert (gamma.witness.count_a, gamma.witness.count_b) == (18, 6)


def test_concat_compare(two_triangles):
    spec = EncoderSpec("igel_concat", alphas=(1, 2))
    assert pairwise_compare(gen_cycle(6), two_triangles, spec).distinguished
    assert not pairwise_compare(gen_shrikhande(), gen_rook(4), spec).distinguished


def collection():
    c6 = gen_cycle(6)
    rng = np.random.default_rng(1)
    return GraphCollection(
        [c6, gen_disjoint_union(gen_cycle(3), gen_cycle(3)),
         permute(c6, random_permutation(6, rng)), gen_path(6)],
        source="fixture")


def test_survey_buckets():
    coll = collection()
    wl = run_survey(coll, EncoderSpec("wl"))
    assert wl.buckets == [[0, 1, 2], [3]]
    assert wl.indistinguishable_pairs == 3

    igel = run_survey(coll, EncoderSpec("igel", alpha=1))
    assert igel.buckets == [[0, 2], [1], [3]]
    assert igel.indistinguishable_pairs == 1
    assert igel.collisions() == [[0, 2]]


def test_survey_verify_counts_isomorphic_pairs():
    report = run_survey(collection(), EncoderSpec("wl"), verify=True)
    assert report.verified_isomorphic_pairs == 1


def test_survey_verify_size_cap():
    coll = GraphCollection([gen_petersen(), gen_shrikhande(), gen_rook(4)])
    with pytest.raises(OracleSizeError) as info:
        run_survey(coll, EncoderSpec("wl"), verify=True)
    assert info.value.offending == (1, 2)


def test_survey_rejects_empty_collection():
    with pytest.raises(InvalidParameterError):
        run_survey(GraphCollection([]), EncoderSpec("wl"))


def test_survey_report_json():
    report = run_survey(collection(), EncoderSpec("igel", alpha=1), known_non_isomorphic=True)
    data = json.loads(report.to_json(detail=True))
    assert data["collection"] == "fixture"
    assert data["method"] == "igel"
    assert data["alpha"] == 1
    assert data["graphs"] == 4
    assert data["buckets"] == 3
    assert data["indistinguishable_pairs"] == 1
    assert data["verified_isomorphic_pairs"] is None
    assert data["errors"] == 1
    assert data["collisions"][0]["graphs"] == [0, 2]
    assert data["collisions"][0]["hash"] == encode_graph(gen_cycle(6), 1).hexdigest()
    assert "errors" not in run_survey(collection(), EncoderSpec("wl")).to_dict()


def test_survey_is_independent_of_workers():
    coll = collection()
    spec = EncoderSpec("igel", alpha=2)
    inline = run_survey(coll, spec)
    pooled = run_survey(coll, spec, workers=2, chunk_size=1)
    assert inline.buckets == pooled.buckets


def test_survey_log_callback():
    messages = []
    run_survey(collection(), EncoderSpec("igel", alpha=1), log_callback=messages.append)
    assert messages and "4 item(s)" in messages[0]
