import json

import pytest
import yaml

from orasim.config import CampaignConfig, ConfigError, from_dict, load_config


def test_preset_resolves(tmp_path):
    path = tmp_path / "c.yaml"
    path.write_text("scheme:\n  preset: bc\n")
    cfg = load_config(path)
    p = cfg.scheme.params()
    assert (p.n, p.k, p.l, p.d) == (180, 14, 30, 5)


def test_explicit_params_override_preset():
    cfg = from_dict({"scheme": {"preset": "bc", "d": 3}})
    assert cfg.scheme.params().d == 3
    assert cfg.scheme.name == "bc(180,14,30,3)"
    cfg = from_dict({"scheme": {"preset": None, "n": 20, "k": 3, "l": 6, "d": 3}})
    assert cfg.scheme.params().kind.value == "bc"


def test_out_of_range_tnr_rejected():
    with pytest.raises(ConfigError, match=r"oracle.tnr\[0\]: 1.2 outside"):
        from_dict({"oracle": {"tnr": [1.2]}})


def test_every_violation_reported():
    with pytest.raises(ConfigError) as err:
        from_dict({
            "scheme": {"preset": None, "n": 5, "k": 9, "l": 3, "d": 2},
            "oracle": {"tpr": [-0.1]},
            "attack": {"kind": "magic", "iterations": 0, "pg_penalties": [1, 3]},
            "extra": 1,
        })
    text = "\n".join(err.value.problems)
    for needle in ["extra: unknown key", "k must satisfy", "oracle.tpr[0]", "attack.kind", "attack.iterations",
                   "attack.pg_penalties"]:
        assert needle in text


def test_penalty_vectors_checked_against_modulus():
    with pytest.raises(ConfigError, match="attack.u/v"):
        from_dict({"attack": {"u": [0, -1], "v": [0, 0]}})
    with pytest.raises(ConfigError, match="non-increasing"):
        from_dict({"attack": {"u": [0, -1, 0, -1, -1]}})
    cfg = from_dict({"attack": {"u": [0, -1, -1, -2, -2]}})
    assert cfg.attack.penalties(5).v == (0,) * 5


def test_missing_scheme_fields():
    with pytest.raises(ConfigError, match="n, k, l and d are all required"):
        from_dict({"scheme": {"preset": None, "n": 10}})


def test_parse_and_read_errors(tmp_path):
    bad = tmp_path / "bad.yaml"
    bad.write_text("scheme: [unclosed\n")
    with pytest.raises(ConfigError, match="parse error"):
        load_config(bad)
    with pytest.raises(ConfigError, match="cannot read"):
        load_config(tmp_path / "missing.yaml")
    with pytest.raises(ConfigError, match="expected a mapping"):
        from_dict([1, 2])


def test_round_trip(tmp_path):
    cfg = from_dict({
        "seed": 11,
        "scheme": {"preset": "hb"},
        "oracle": {"tpr": [1.0, 0.9], "tnr": [0.6]},
        "attack": {"iterations": 7, "u": [-1, -1]},
        "output": {"dir": "out"},
    })
    path = tmp_path / "c.yaml"
    path.write_text(cfg.dump())
    again = load_config(path)
    assert again == cfg
    assert again.dump() == cfg.dump()


def test_json_config(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"seed": 3, "attack": {"kind": "mod10"}}))
    assert load_config(path).attack.kind == "mod10"


def test_defaults_valid():
    assert CampaignConfig().validate().attack.kind == "points"
    assert yaml.safe_load(CampaignConfig().dump())["seed"] == 0
