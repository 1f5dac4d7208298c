import json

from inequality_observatory.cli import main


def test_check_prints_verdict_and_margin(capsys):
    code = main(["-q", "check", "GA2E", "--point", "4,9"])

    assert code == 0
    assert capsys.readouterr().out.strip() == "StrictlyHolds margin=0.5"


def test_check_outside_validity_is_not_a_failure(capsys):
    code = main(["-q", "check", "GA2E", "--point=4,-1"])

    assert code == 0
    assert capsys.readouterr().out.strip() == "OutsideValidity"


def test_check_with_weights_and_json_output(capsys):
    code = main(["-q", "--json", "check", "GAN", "--param", "n=3", "--point", "2,2,2", "--point", "w=1,2,3"])

    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["classification"]["verdict"] == "Equality"
    assert payload["entry"]["params"] == {"n": 3}
    assert payload["point"]["tuples"][0]["weights"] == ["1.0", "2.0", "3.0"]


def test_check_tuple_entry(capsys):
    code = main(["-q", "check", "HOLDER", "--param", "p=3", "--tuple", "1,2,3", "--tuple", "2,1,5"])

    assert code == 0
    assert capsys.readouterr().out.startswith("StrictlyHolds")


def test_invalid_tuple_reports_outside_validity(capsys):
    code = main(["-q", "check", "GAN", "--param", "n=2", "--point=1,-4"])

    assert code == 0
    assert capsys.readouterr().out.strip() == "OutsideValidity"


def test_violated_point_exits_one(capsys):
    code = main(
        [
            "-q",
            "check",
            "POPOVICIU",
            "--param",
            "n=3",
            "--param",
            "convention=ExponentInvWk",
            "--point",
            "1,4,2",
        ]
    )

    assert code == 1
    assert capsys.readouterr().out.startswith("Violated")


def test_complement_flag(capsys):
    code = main(["-q", "check", "BERNOULLI_B2", "--complement", "--point=-0.5,2"])

    assert code == 0
    assert capsys.readouterr().out.startswith("StrictlyHolds")


def test_usage_errors_exit_two(capsys):
    assert main(["-q", "check", "NOPE", "--point", "1,2"]) == 2
    assert "Unknown inequality 'NOPE'" in capsys.readouterr().err
    assert main([]) == 2
    assert main(["-q", "check", "GA2E", "--param", "oops", "--point", "1,2"]) == 2


def test_list_and_explain(capsys):
    assert main(["-q", "list"]) == 0
    listing = capsys.readouterr().out
    assert listing.splitlines()[0].startswith("GA2E")
    assert "POWERMEAN" in listing

    assert main(["-q", "explain", "BERNOULLI_B1"]) == 0
    text = capsys.readouterr().out
    assert text.startswith("BERNOULLI_B1")
    assert "complement" in text


def test_witness_commands(capsys):
    assert main(["-q", "--samples", "20", "--seed", "3", "witness", "W_REFLECT"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("W_REFLECT: BERNOULLI_B1 -> BERNOULLI_B2")
    assert "failures=0" in out

    assert main(["-q", "--json", "witnesses"]) == 0
    names = [row["name"] for row in json.loads(capsys.readouterr().out)]
    assert len(names) == 23


def test_suite_from_config_file(tmp_path, capsys):
    path = tmp_path / "suite.json"
    path.write_text(
        json.dumps(
            {
                "samples_per_entry": 3,
                "witness_samples": 3,
                "limit_tuples": 1,
                "chain_tuples": 1,
                "entries": ["GA2E"],
                "witnesses": ["W_REFLECT"],
            }
        ),
        encoding="utf-8",
    )

    code = main(["-q", "--json", "--seed", "5", "suite", "--config", str(path)])

    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["passed"] is True
    assert payload["seed"] == 5
    assert payload["config"]["entries"] == ["GA2E"]


def test_missing_config_file_is_a_usage_error(tmp_path, capsys):
    assert main(["-q", "suite", "--config", str(tmp_path / "missing.json")]) == 2
    assert "error:" in capsys.readouterr().err
