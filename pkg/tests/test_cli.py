import json
import subprocess
import sys

from conftest import DATA, GOLDEN, X1_NUMERATORS, Y2_NUMERATORS
from nashrand.cli import main
from nashrand.families import beta_ne
from nashrand.serialize import dumps_distribution, dumps_game, dumps_profile, load_game


def run_cli(capsys, *argv) -> tuple[int, str]:
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def test_gen_example1_matches_golden_bytes(capsys):
    rc, out = run_cli(capsys, "gen", "example1")
    assert rc == 0
    assert out == (GOLDEN / "example1.json").read_text()


def test_gen_example2_matches_golden_bytes(capsys):
    rc, out = run_cli(capsys, "gen", "example2")
    assert rc == 0
    assert out == (GOLDEN / "example2.json").read_text()


def test_gen_beta_eleven_display(capsys):
    rc, out = run_cli(capsys, "gen", "beta", "--n", "11")
    assert rc == 0
    obj = json.loads(out)
    assert obj["n"] == 11
    assert obj["B"][10] == [1] + [0] * 10
    assert obj["B"][0] == [0, 1, 1] + [0] * 8


def test_gen_primeblock_small(capsys):
    rc, out = run_cli(capsys, "gen", "primeblock", "--n", "1")
    obj = json.loads(out)
    assert obj["n"] == 4
    assert obj["B"] == [[0, 1, 1, 0], [0, 0, 1, 1], [0, 1, 0, 1], [1, 0, 0, 0]]


def test_gen_writes_file(tmp_path, capsys):
    target = tmp_path / "game.json"
    rc, _ = run_cli(capsys, "gen", "example1", "--out", str(target))
    assert rc == 0
    assert target.read_text() == (GOLDEN / "example1.json").read_text()


def test_solve_example1(tmp_path, capsys):
    rc, out = run_cli(capsys, "solve", str(GOLDEN / "example1.json"))
    assert rc == 0
    obj = json.loads(out)
    assert obj["c1_min"] == "34"
    assert obj["c2_min"] == "8"
    assert len(obj["equilibria"]) == 1
    eq = obj["equilibria"][0]
    assert eq["x"]["numerators"] == [str(v) for v in X1_NUMERATORS]
    assert eq["y"]["denominator"] == "8"
    assert obj["degenerate"] is False


def test_solve_example2(capsys):
    rc, out = run_cli(capsys, "solve", str(GOLDEN / "example2.json"))
    obj = json.loads(out)
    assert obj["c1_min"] == obj["c2_min"] == "34"
    assert obj["equilibria"][0]["y"]["numerators"] == [str(v) for v in Y2_NUMERATORS]


def test_solve_coordination_csv(capsys):
    rc, out = run_cli(
        capsys, "solve", str(DATA / "coordination_2x2.json"), "--format", "csv"
    )
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == (
        "index,complexity_x,complexity_y,"
        "x_numerators,x_denominator,y_numerators,y_denominator"
    )
    assert len(lines) == 4  # three equilibria
    assert lines[1].startswith("1,1,1,")


def test_gen_solve_verify_round_trip_bit_for_bit(tmp_path, capsys):
    game_path = tmp_path / "g.json"
    rc, _ = run_cli(capsys, "gen", "example1", "--out", str(game_path))
    assert rc == 0

    rc, solve_out = run_cli(capsys, "solve", str(game_path))
    assert rc == 0

    # library path produces the same JSON bytes
    from nashrand.cli import _solve_jsonable

    lib_payload = _solve_jsonable(load_game(str(game_path)), None)
    assert solve_out == json.dumps(lib_payload, indent=2) + "\n"

    profile, _ = beta_ne(8)
    profile_path = tmp_path / "p.json"
    profile_path.write_text(dumps_profile(profile))
    rc, verify_out = run_cli(capsys, "verify", str(game_path), str(profile_path))
    assert rc == 0
    verdict = json.loads(verify_out)
    assert verdict["nash"] is True
    assert verdict["complexity_x"] == "34"
    assert verdict["complexity_y"] == "8"


def test_verify_rejects_capability_below_complexity(tmp_path, capsys):
    profile, _ = beta_ne(8)
    profile_path = tmp_path / "p.json"
    profile_path.write_text(dumps_profile(profile))
    rc, out = run_cli(
        capsys,
        "verify", str(GOLDEN / "example1.json"), str(profile_path),
        "--c1", "33", "--c2", "8",
    )
    assert rc == 0
    verdict = json.loads(out)
    assert verdict["capability_ok_1"] is False
    assert verdict["capability_ok_2"] is True


def test_verify_uniform_profile_is_not_nash(tmp_path, capsys):
    from nashrand.games import Profile, uniform

    profile_path = tmp_path / "u.json"
    profile_path.write_text(dumps_profile(Profile(uniform(8), uniform(8))))
    rc, out = run_cli(capsys, "verify", str(GOLDEN / "example1.json"), str(profile_path))
    assert json.loads(out)["nash"] is False


def test_scan_beta(capsys):
    rc, out = run_cli(capsys, "scan", "beta", "--from", "8", "--to", "12")
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,c1,c2,log2_c1_over_n,g_n,abs_det,abs_k,wallclock_ms"
    first = lines[1].split(",")
    assert first[0] == "8" and first[1] == "34" and first[2] == "8"
    assert first[4] == "1" and first[5] == "9" and first[6] == "34"


def test_scan_primeblock(capsys):
    rc, out = run_cli(capsys, "scan", "primeblock", "--from", "1", "--to", "3")
    lines = out.strip().splitlines()
    rows = [line.split(",") for line in lines[1:]]
    # closed form: (k+1) prod(p) + sum of prod(p)/p over first k primes
    assert [r[1] for r in rows] == ["5", "23", "151"]
    assert [r[2] for r in rows] == ["4", "8", "14"]
    assert rows[0][4] == ""  # no gcd column for this family


def test_scan_constsum_families(capsys):
    rc, out = run_cli(capsys, "scan", "constsum-beta", "--from", "8", "--to", "9")
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    assert rows[0][1] == rows[0][2] == "34"
    rc, out = run_cli(capsys, "scan", "constsum-primeblock", "--from", "2", "--to", "2")
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    assert rows[0][1] == rows[0][2] == "23"


def test_scan_closed_form_matches_enumeration(capsys, corpus):
    from nashrand.solving import min_complexities

    rc, out = run_cli(capsys, "scan", "beta", "--from", "8", "--to", "10")
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    for row, key in zip(rows, ("example1", "beta9", "beta10")):
        assert (int(row[1]), int(row[2])) == min_complexities(corpus[key])
    rc, out = run_cli(capsys, "scan", "primeblock", "--from", "1", "--to", "2")
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    for row, key in zip(rows, ("primeblock1", "primeblock2")):
        assert (int(row[1]), int(row[2])) == min_complexities(corpus[key])


def test_solve_warns_on_degeneracy(tmp_path, capsys):
    from nashrand.exact import IntMatrix
    from nashrand.games import Game

    game = Game(IntMatrix([[1, 0], [1, 0]]), IntMatrix([[1, 1], [0, 0]]))
    path = tmp_path / "degen.json"
    path.write_text(dumps_game(game))
    rc = main(["solve", str(path)])
    captured = capsys.readouterr()
    assert rc == 0
    assert "degeneracy detected" in captured.err
    assert json.loads(captured.out)["degenerate"] is True


def test_recurrence_rows(capsys):
    rc, out = run_cli(capsys, "recurrence", "--to", "9")
    assert rc == 0
    lines = out.strip().splitlines()
    b_column = [line.split(",")[2] for line in lines[1:10]]
    assert b_column == ["0", "1", "0", "1", "-1", "2", "-2", "4", "-5"]
    det_column = [line.split(",")[3] for line in lines[1:8]]
    assert det_column == ["1", "1", "2", "3", "4", "6", "9"]
    assert lines[-1].startswith("# identities verified")


def test_sample_command(tmp_path, capsys):
    dist_path = tmp_path / "u8.json"
    from nashrand.games import uniform

    dist_path.write_text(dumps_distribution(uniform(8)))
    rc, out = run_cli(
        capsys, "sample", str(dist_path), "--count", "8000", "--seed", "11"
    )
    assert rc == 0
    payload = json.loads(out)
    assert sum(payload["outcome_counts"]) == 8000
    # binomial 5-sigma band around 1000 per outcome
    sigma = (8000 * (1 / 8) * (7 / 8)) ** 0.5
    for count in payload["outcome_counts"]:
        assert abs(count - 1000) <= 5 * sigma
    assert payload["bits_consumed"] == 24000


def test_sample_point_mass_consumes_no_bits(tmp_path, capsys):
    from nashrand.games import MixedStrategy

    dist_path = tmp_path / "point.json"
    dist_path.write_text(dumps_distribution(MixedStrategy((1, 0), 1)))
    rc, out = run_cli(capsys, "sample", str(dist_path), "--count", "50", "--seed", "1")
    payload = json.loads(out)
    assert payload["bits_consumed"] == 0
    assert payload["outcome_counts"] == [50, 0]


def test_analyze_command(tmp_path, capsys):
    profile, _ = beta_ne(8)
    dist_path = tmp_path / "x1.json"
    dist_path.write_text(dumps_distribution(profile.x))
    rc, out = run_cli(capsys, "analyze", str(dist_path), "--depth", "64")
    payload = json.loads(out)
    assert payload["depth"] == 64
    num, den = payload["tail"].split("/")
    assert int(num) / int(den) <= 8 / 2**64


def test_bound_command(capsys):
    rc, out = run_cli(capsys, "bound", str(DATA / "matching_pennies.json"))
    payload = json.loads(out)
    assert payload["bound_c1"] == payload["bound_c2"] == "336"
    assert payload["measured_c1"] == "2"
    rc, out = run_cli(capsys, "bound", str(GOLDEN / "example1.json"))
    payload = json.loads(out)
    assert int(payload["bound_c1"]) >= 34


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "A": [[1, 0], [0, 1]], "B": [[1, 0], [0]]}')
    rc, _ = run_cli(capsys, "solve", str(bad))
    assert rc == 2
    missing = tmp_path / "missing.json"
    rc, _ = run_cli(capsys, "solve", str(missing))
    assert rc == 2


def test_unsupported_dimension_exit_code(capsys):
    rc, _ = run_cli(capsys, "gen", "beta", "--n", "1")
    assert rc == 2


def test_dimension_mismatch_exit_code(tmp_path, capsys):
    from nashrand.games import Profile, uniform

    profile_path = tmp_path / "p2.json"
    profile_path.write_text(dumps_profile(Profile(uniform(2), uniform(2))))
    rc, _ = run_cli(capsys, "verify", str(GOLDEN / "example1.json"), str(profile_path))
    assert rc == 2


def test_gen_fixed_example_rejects_other_n(capsys):
    rc, _ = run_cli(capsys, "gen", "example1", "--n", "9")
    assert rc == 2


def test_resource_limit_exit_code(tmp_path, capsys):
    game_path = tmp_path / "beta12.json"
    run_cli(capsys, "gen", "beta", "--n", "12", "--out", str(game_path))
    rc, _ = run_cli(capsys, "solve", str(game_path))
    assert rc == 4


def test_max_n_env_override(tmp_path, capsys, monkeypatch):
    game_path = tmp_path / "beta11.json"
    run_cli(capsys, "gen", "beta", "--n", "11", "--out", str(game_path))
    monkeypatch.setenv("NASHRAND_MAX_N", "10")
    rc, _ = run_cli(capsys, "solve", str(game_path))
    assert rc == 4
    monkeypatch.setenv("NASHRAND_MAX_N", "11")
    rc, out = run_cli(capsys, "solve", str(game_path))
    assert rc == 0
    assert json.loads(out)["c1_min"] == "131"  # closed form at n = 11
    # explicit flag beats the environment
    monkeypatch.setenv("NASHRAND_MAX_N", "11")
    rc, _ = run_cli(capsys, "solve", str(game_path), "--max-n", "10")
    assert rc == 4


def test_console_entry_point_runs():
    result = subprocess.run(
        [sys.executable, "-m", "nashrand.cli"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 2


def test_module_invocation_gen():
    result = subprocess.run(
        [sys.executable, "-c",
         "import sys; from nashrand.cli import main; sys.exit(main(['gen', 'example1']))"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert '"family_tag": "example1"' in result.stdout
