import json

import pytest

from vowelaug.policy import AugPolicy, default_policy, load_policy, save_policy


def test_default_policy_matches_published_constants():
    d = default_policy().to_dict()
    assert d["pitch_rules"] == [
        {"gender": "male", "probability": 0.2, "lower_semitones": -2.0, "upper_semitones": 0.0},
        {"gender": "male", "probability": 0.3, "lower_semitones": 0.0, "upper_semitones": 4.0},
        {"gender": "female", "probability": 0.3, "lower_semitones": -4.0, "upper_semitones": 0.0},
        {"gender": "female", "probability": 0.3, "lower_semitones": 2.0, "upper_semitones": 6.0},
    ]
    assert d["amplitude"] == {"low": 0.5, "high": 1.5}
    assert d["vowel"]["threshold"] == 0.3
    assert d["vowel"]["intensity_range"] == [0.5, 2.0]


def test_policy_json_round_trip(tmp_path):
    policy = default_policy()
    path = tmp_path / "p.json"
    save_policy(path, policy)
    assert load_policy(path) == policy
    assert json.loads(path.read_text()) == policy.to_dict()


def test_policy_partial_document_uses_defaults(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"stages": ["vowel"], "vowel": {"threshold": 0.4}}))
    policy = load_policy(path)
    assert policy.stages == ("vowel",)
    assert policy.vowel.threshold == 0.4
    assert policy.vowel.intensity_range == (0.5, 2.0)
    assert policy.amplitude.low == 0.5


def test_policy_validation():
    with pytest.raises(ValueError):
        AugPolicy(stages=("bogus",))
    with pytest.raises(ValueError):
        AugPolicy(copies_per_input=0)


def test_content_hash_tracks_content():
    a = default_policy()
    b = AugPolicy(copies_per_input=2)
    assert a.content_hash() == default_policy().content_hash()
    assert a.content_hash() != b.content_hash()
