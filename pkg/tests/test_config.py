import json

import pytest

from inequality_observatory.checker import EntryPlan, SuiteConfig
from inequality_observatory.errors import UnknownName
from inequality_observatory.numerics import PrecisionContext


def test_defaults():
    config = SuiteConfig()

    assert config.seed == 42
    assert config.samples_per_entry == 1000
    assert config.precision_bits == 128
    assert config.workers == 1
    assert [plan.name for plan in config.entries][0] == "GA2E"
    assert config.ctx.precision_bits == 128


def test_from_env_reads_overrides(monkeypatch):
    monkeypatch.setenv("INEQUALITY_OBSERVATORY_SEED", "7")
    monkeypatch.setenv("INEQUALITY_OBSERVATORY_SAMPLES", "25")
    monkeypatch.setenv("INEQUALITY_OBSERVATORY_PRECISION", "256")
    monkeypatch.setenv("INEQUALITY_OBSERVATORY_WORKERS", "4")

    config = SuiteConfig.from_env()

    assert (config.seed, config.samples_per_entry, config.precision_bits, config.workers) == (7, 25, 256, 4)


def test_precision_context_from_env(monkeypatch):
    monkeypatch.setenv("INEQUALITY_OBSERVATORY_PRECISION", "256")
    monkeypatch.delenv("INEQUALITY_OBSERVATORY_TOLERANCE", raising=False)

    assert PrecisionContext.from_env().precision_bits == 256


def test_from_json_accepts_names_and_plan_objects(tmp_path):
    path = tmp_path / "suite.json"
    path.write_text(
        json.dumps(
            {
                "samples_per_entry": 20,
                "entries": ["GA2E", {"name": "HOLDER", "plans": [{"p": [1.5, 3.0]}]}],
                "witnesses": ["W_REFLECT"],
            }
        ),
        encoding="utf-8",
    )

    config = SuiteConfig.from_json(path)

    assert config.samples_per_entry == 20
    assert [plan.name for plan in config.entries] == ["GA2E", "HOLDER"]
    assert config.entries[1].plans == ({"p": (1.5, 3.0)},)
    assert config.entries[1].complement_plans == EntryPlan.for_entry("HOLDER").complement_plans
    assert config.witnesses == ("W_REFLECT",)


def test_from_json_rejects_unknown_keys(tmp_path):
    path = tmp_path / "suite.json"
    path.write_text(json.dumps({"sample_count": 3}), encoding="utf-8")

    with pytest.raises(ValueError, match="Unknown config key"):
        SuiteConfig.from_json(path)


def test_unknown_entry_names_are_rejected():
    with pytest.raises(UnknownName):
        SuiteConfig(entries=(EntryPlan(name="NOPE"),))


@pytest.mark.parametrize(
    "field,value",
    [
        ("samples_per_entry", 0),
        ("witness_samples", 0),
        ("workers", 0),
        ("boundary_fraction", 1.5),
        ("exact_fraction", -0.1),
        ("search_budget", -1),
    ],
)
def test_invalid_values_are_rejected(field, value):
    with pytest.raises(ValueError):
        SuiteConfig(**{field: value})


def test_with_overrides_only_touches_given_fields():
    base = SuiteConfig(seed=3, samples_per_entry=10)

    updated = base.with_overrides(samples=50, workers=2)

    assert updated.seed == 3
    assert updated.samples_per_entry == 50
    assert updated.workers == 2
    assert base.with_overrides() == base


def test_report_config_leaves_out_the_worker_count():
    payload = SuiteConfig(workers=3).to_dict()

    assert "workers" not in payload
    assert payload["exact_fraction"] == 0.5
    assert payload["entries"][0] == "GA2E"
