import json

import pytest

from scatcomp.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_complement_golden(capsys):
    code, out, _ = run(capsys, "complement", "ananas", "as")
    assert code == 0
    assert out == "anan\nanna\nnana\n"


def test_complement_counts_are_tab_separated(capsys):
    code, out, _ = run(capsys, "complement", "ababbaba", "ab", "--counts")
    assert code == 0
    assert out.splitlines() == [
        "ababba\t1",
        "abbaba\t3",
        "abbbaa\t1",
        "bababa\t2",
        "babbaa\t1",
    ]


def test_complement_json_envelope(capsys):
    code, out, _ = run(capsys, "--json", "complement", "ananas", "as")
    assert code == 0
    env = json.loads(out)
    assert env["command"] == "complement"
    assert env["inputs"]["w"] == "ananas"
    assert env["result"] == ["anan", "anna", "nana"]
    assert env["stats"]["set_size"] == 3
    assert env["stats"]["embeddings"] == 3
    assert env["stats"]["elapsed_ms"] >= 0


def test_json_flag_works_after_the_subcommand(capsys):
    code, out, _ = run(capsys, "complement", "ananas", "as", "--json")
    assert code == 0
    assert json.loads(out)["result"] == ["anan", "anna", "nana"]


def test_complement_rejects_non_factor(capsys):
    code, _, err = run(capsys, "complement", "ab", "ba")
    assert code == 2
    assert "scattered factor" in err


def test_complement_table(capsys):
    code, out, _ = run(capsys, "complement", "aba", "a")
    assert code == 0
    code, out, _ = run(capsys, "complement", "aba", "a", "--table")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("P[1] {a} {ab} {aba}")
    assert len(lines) == 2


def test_embed_modes(capsys):
    code, out, _ = run(capsys, "embed", "peelwheel", "peel", "--count")
    assert (code, out) == (0, "7\n")
    code, out, _ = run(capsys, "embed", "ababa", "aba")
    assert code == 0
    assert out.splitlines() == ["1,2,3", "1,2,5", "1,4,5", "3,4,5"]
    code, out, _ = run(capsys, "embed", "ababbaba", "ab", "--group")
    assert code == 0
    assert out.splitlines()[0] == "ababba\t1"
    code, out, _ = run(capsys, "embed", "ab", "ba")
    assert code == 1
    assert out == ""


def test_archfac_golden(capsys):
    code, out, _ = run(capsys, "archfac", "abcabc")
    assert code == 0
    assert out == "abc|abc\nrest=\nmodus=cc\niota=2\n"


def test_archfac_with_alphabet_codec(capsys):
    code, out, _ = run(capsys, "archfac", "bnbn", "--alphabet", "nb")
    assert code == 0
    assert out.splitlines() == ["bn|bn", "rest=", "modus=nn", "iota=2"]
    code, _, err = run(capsys, "archfac", "bnbn", "--alphabet", "xy")
    assert code == 2


def test_find_u_round_trip(tmp_path, capsys):
    f = tmp_path / "s.txt"
    f.write_text("anna\nanan\nnana\n")
    code, out, _ = run(capsys, "find-u", "ananas", "--set-file", str(f))
    assert (code, out) == (0, "as\n")
    code, out, _ = run(capsys, "find-u", "ananas", "--set-file", str(f), "--all")
    assert (code, out) == (0, "as\n")


def test_find_u_no_solution(tmp_path, capsys):
    f = tmp_path / "s.txt"
    f.write_text("a\nb\n")
    code, out, _ = run(capsys, "find-u", "ab", "--set-file", str(f))
    assert (code, out) == (1, "no solution\n")


def test_find_u_rejects_malformed_file_with_line_number(tmp_path, capsys):
    f = tmp_path / "s.txt"
    f.write_text("ab\nb a\n")
    code, _, err = run(capsys, "find-u", "abab", "--set-file", str(f))
    assert code == 2
    assert ":2:" in err


def test_set_file_header_fixes_the_codec(tmp_path, capsys):
    f = tmp_path / "s.txt"
    f.write_text("#alphabet:ban\nnana\n")
    code, out, _ = run(capsys, "find-u", "banana", "--set-file", str(f))
    assert (code, out) == (1, "no solution\n")


def test_exists_w_pairs(tmp_path, capsys):
    f = tmp_path / "z.tsv"
    f.write_text("ba\tab\nab\tab\n")
    code, out, _ = run(capsys, "exists-w", "--pairs", str(f))
    assert (code, out) == (0, "abab\n")


def test_exists_w_no_solution(tmp_path, capsys):
    f = tmp_path / "z.tsv"
    f.write_text("aa\taa\nbb\tbb\n")
    code, out, _ = run(capsys, "exists-w", "--pairs", str(f))
    assert (code, out) == (1, "no solution\n")


def test_exists_w_rejects_malformed_pairs(tmp_path, capsys):
    f = tmp_path / "z.tsv"
    f.write_text("ba ab\n")
    code, _, err = run(capsys, "exists-w", "--pairs", str(f))
    assert code == 2
    assert ":1:" in err


def test_find_w(tmp_path, capsys):
    f = tmp_path / "s.txt"
    f.write_text("ba\n")
    code, out, _ = run(capsys, "find-w", "ab", "--set-file", str(f))
    assert (code, out) == (0, "abba\n")
    f.write_text("a\nb\n")
    code, out, _ = run(capsys, "find-w", "ab", "--set-file", str(f))
    assert (code, out) == (1, "no solution\n")


def test_shuffle(capsys):
    code, out, _ = run(capsys, "shuffle", "ban", "ana", "--size-only")
    assert (code, out) == (0, "11\n")
    code, out, _ = run(capsys, "shuffle", "abc", "abc")
    assert out.splitlines() == ["aabbcc", "aabcbc", "ababcc", "abacbc", "abcabc"]


def test_perfect_shuffle(capsys):
    code, out, _ = run(capsys, "perfect-shuffle", "bnn", "aaa")
    assert (code, out) == (0, "banana\n")
    code, _, err = run(capsys, "perfect-shuffle", "ab", "a")
    assert code == 2


def test_self_shuffle_exit_codes(capsys):
    code, out, _ = run(capsys, "self-shuffle", "abaabaaa", "abaa")
    assert (code, out) == (0, "true\n")
    code, out, _ = run(capsys, "self-shuffle", "aabbaa", "aab")
    assert (code, out) == (1, "false\n")


def test_budget_env_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("SCATCOMP_BUDGET", "2")
    code, _, err = run(capsys, "shuffle", "abc", "abc")
    assert code == 3
    assert "budget" in err
    monkeypatch.setenv("SCATCOMP_BUDGET", "zero")
    code, _, err = run(capsys, "shuffle", "abc", "abc")
    assert code == 2


def test_verify_subcommand(capsys):
    code, out, _ = run(capsys, "verify", "equivariance", "--seed", "7", "--max-len", "5")
    assert code == 0
    assert out.splitlines()[0].startswith("equivariance: pass")
    assert "1/1 suites passed" in out


def test_verify_json(capsys):
    code, out, _ = run(
        capsys, "--json", "verify", "perfectshuffle", "--max-len", "6"
    )
    assert code == 0
    env = json.loads(out)
    assert env["result"][0]["name"] == "perfectshuffle"
    assert env["result"][0]["ok"] is True


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "nope")
    assert code == 2
    assert "unknown suite" in err


def test_verify_reports_failures_with_exit_one(capsys):
    code, out, _ = run(capsys, "verify", "second-occurrence-greedy", "--max-len", "6")
    assert code == 1
    assert "FAIL" in out


def test_plain_and_json_results_agree(tmp_path, capsys):
    cases = [
        ("complement", "ananas", "as"),
        ("shuffle", "ban", "ana"),
        ("archfac", "abcabc"),
        ("embed", "ababa", "aba"),
    ]
    for argv in cases:
        _, plain, _ = run(capsys, *argv)
        _, enveloped, _ = run(capsys, "--json", *argv)
        result = json.loads(enveloped)["result"]
        if argv[0] == "embed":
            flat = [",".join(map(str, e)) for e in result]
            assert plain.splitlines() == flat
        elif argv[0] == "archfac":
            assert plain.splitlines()[0] == "|".join(result["arches"])
        else:
            assert plain.splitlines() == result
