from __future__ import annotations

import pytest

from mdslift.cli import main
from mdslift.formats import parse_code, parse_dh


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def ex1_file(tmp_path):
    path = tmp_path / "ex1.txt"
    assert main(["example1", "-o", str(path)]) == 0
    return str(path)


@pytest.fixture()
def dh_file(tmp_path):
    path = tmp_path / "dh.txt"
    assert main(["dh", "-p", "7", "-t", "3", "-n", "8", "--seed", "5", "-o", str(path)]) == 0
    return str(path)


@pytest.fixture()
def lift_file(tmp_path, ex1_file, dh_file):
    path = tmp_path / "lift.txt"
    assert main(["lift", ex1_file, dh_file, "-o", str(path)]) == 0
    return str(path)


# field ------------------------------------------------------------------------


def test_field_prime(capsys):
    code, out, _ = run(capsys, "field", "-p", "7", "-t", "1")
    assert code == 0
    assert "w=3" in out and "order=7" in out and "group_order=6" in out


def test_field_extension(capsys):
    code, out, _ = run(capsys, "field", "-p", "7", "-t", "3")
    assert code == 0
    assert "modulus=2,1,1,1" in out
    assert "w=[0,1,0]" in out
    assert "group_order=342" in out


def test_field_rejects_nonprime(capsys):
    code, _, err = run(capsys, "field", "-p", "9", "-t", "1")
    assert code == 2
    assert "NotPrime" in err


# construction commands ----------------------------------------------------------


def test_example1_emits_reference_code(capsys, ex1_file):
    code = parse_code(open(ex1_file).read())
    assert (code.n, code.k) == (8, 3)
    assert code.generator.to_lists()[0] == [1, 0, 0, 6, 4, 2, 5, 3]
    first = open(ex1_file).read().splitlines()[0]
    assert first.startswith("# generated-by mdslift")


def test_grs_file_has_expected_distance(capsys, tmp_path):
    path = tmp_path / "grs.txt"
    assert main(["grs", "-p", "7", "-t", "1", "-n", "7", "-k", "3", "-o", str(path)]) == 0
    code, out, _ = run(capsys, "mindist", str(path))
    assert code == 0 and out.strip() == "5"


def test_grs_too_long_is_usage_error(capsys):
    code, _, err = run(capsys, "grs", "-p", "7", "-t", "1", "-n", "8", "-k", "3")
    assert code == 2 and "TooLong" in err


def test_grs_direct_extension_field(capsys, tmp_path):
    path = tmp_path / "grs343.txt"
    assert main(["grs", "-p", "7", "-t", "3", "-n", "8", "-k", "3", "-o", str(path)]) == 0
    code, out, _ = run(capsys, "ismds", str(path))
    assert code == 0 and out.strip() == "MDS"


# verdict commands ---------------------------------------------------------------


def test_mindist_reference(capsys, ex1_file):
    code, out, _ = run(capsys, "mindist", ex1_file)
    assert code == 0 and out.strip() == "6"


def test_mindist_honors_enum_cap(capsys, tmp_path):
    path = tmp_path / "g.txt"
    main(["grs", "-p", "7", "-t", "3", "-n", "8", "-k", "3", "-o", str(path)])
    code, _, err = run(capsys, "mindist", str(path), "--max-enum", "100")
    assert code == 2 and "TooManyCodewords" in err


def test_ismds_true_and_false(capsys, ex1_file, tmp_path):
    code, out, _ = run(capsys, "ismds", ex1_file)
    assert code == 0 and out.strip() == "MDS"
    bad = tmp_path / "bad.txt"
    bad.write_text(
        "mdslift-matrix v1\nfield p=7 t=1\nrows=2 cols=4\n"
        "1 0 1 1\n0 1 2 2\n"  # two equal columns
    )
    code, out, _ = run(capsys, "ismds", str(bad))
    assert code == 1 and out.strip() == "not MDS"


# dh sampling --------------------------------------------------------------------


def test_dh_writes_distinct_entries(dh_file):
    diag = parse_dh(open(dh_file).read())
    assert diag.n == 8 and diag.l_value == 1
    assert "# dh l=1" in open(dh_file).read()


def test_dh_same_seed_is_byte_identical(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    args = ["dh", "-p", "7", "-t", "3", "-n", "8", "--seed", "9"]
    assert main(args + ["-o", str(a)]) == 0
    assert main(args + ["-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_dh_field_too_small(capsys):
    code, _, err = run(capsys, "dh", "-p", "2", "-t", "2", "-n", "4")
    assert code == 2 and "FieldTooSmall" in err


def test_dh_seed_must_be_64_bit(capsys):
    code, _, _ = run(capsys, "dh", "-p", "7", "-t", "3", "-n", "8", "--seed", "-1")
    assert code == 2


# lifting ------------------------------------------------------------------------


def test_lift_pipeline_produces_mds_code(capsys, lift_file):
    code, out, _ = run(capsys, "ismds", lift_file)
    assert code == 0 and out.strip() == "MDS"
    lifted = parse_code(open(lift_file).read())
    assert lifted.spec.order == 343 and (lifted.n, lifted.k) == (8, 3)


def test_lift_systematic_flag(tmp_path, ex1_file, dh_file):
    path = tmp_path / "sys.txt"
    assert main(["lift", ex1_file, dh_file, "--systematic", "-o", str(path)]) == 0
    lifted = parse_code(open(path).read())
    assert lifted.generator.codes[:, :3].tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_lift_strict_rejects_repeats(capsys, tmp_path, ex1_file):
    rep = tmp_path / "rep.txt"
    rep.write_text(
        "mdslift-matrix v1\nfield p=7 t=3 modulus=2,1,1,1\nrows=1 cols=8\n"
        "w^5 w^5 1 w^2 w^3 w^4 w^6 w^7\n"
    )
    code, _, err = run(capsys, "lift", ex1_file, str(rep))
    assert code == 2 and "NotDh" in err
    out_path = tmp_path / "relaxed.txt"
    assert main(["lift", ex1_file, str(rep), "--no-strict", "-o", str(out_path)]) == 0
    code, out, _ = run(capsys, "ismds", str(out_path))
    assert code == 0


def test_lift_determinism_end_to_end(tmp_path, ex1_file):
    payloads = []
    for name in ("x", "y"):
        dh_path = tmp_path / f"dh_{name}.txt"
        lift_path = tmp_path / f"lift_{name}.txt"
        assert main(["dh", "-p", "7", "-t", "3", "-n", "8", "--seed", "3",
                     "-o", str(dh_path)]) == 0
        assert main(["lift", ex1_file, str(dh_path), "-o", str(lift_path)]) == 0
        payloads.append(lift_path.read_bytes())
    assert payloads[0] == payloads[1]


# diversity ----------------------------------------------------------------------


def test_diversity_values(capsys):
    code, out, _ = run(capsys, "diversity", "-p", "2", "-t", "2", "-n", "3")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "diversity", "-p", "7", "-t", "3", "-n", "8")
    assert code == 0 and out.strip() == "4274341943967810"


def test_diversity_field_too_small(capsys):
    code, _, err = run(capsys, "diversity", "-p", "2", "-t", "1", "-n", "5")
    assert code == 2 and "FieldTooSmall" in err


# encode / decode ----------------------------------------------------------------


def test_encode_zero_message(capsys, ex1_file):
    code, out, _ = run(capsys, "encode", ex1_file, "0", "0", "0")
    assert code == 0
    assert out.splitlines()[-1].split() == ["0"] * 8


def test_encode_decode_roundtrip_with_erasures(capsys, tmp_path, lift_file):
    word_path = tmp_path / "word.txt"
    assert main(["encode", lift_file, "w^5", "0", "w^100", "-o", str(word_path)]) == 0
    tokens = word_path.read_text().splitlines()[-1].split()
    for i in (0, 2, 4, 6, 7):
        tokens[i] = "?"
    holey = tmp_path / "holey.txt"
    holey.write_text(" ".join(tokens) + "\n")
    code, out, _ = run(capsys, "decode", lift_file, "--word-file", str(holey))
    assert code == 0
    assert out.strip() == "w^5 0 w^100"


def test_decode_accepts_argv_tokens(capsys, ex1_file):
    code, out, _ = run(capsys, "encode", ex1_file, "2", "0", "5")
    tokens = out.splitlines()[-1].split()
    tokens[1] = "?"
    tokens[5] = "?"
    code, out, _ = run(capsys, "decode", ex1_file, *tokens)
    assert code == 0 and out.strip() == "2 0 5"


def test_decode_too_many_erasures_is_data_error(capsys, ex1_file):
    word = ["?", "?", "?", "?", "?", "?", "1", "1"]
    code, _, err = run(capsys, "decode", ex1_file, *word)
    assert code == 1 and "TooManyErasures" in err


def test_decode_inconsistent_word_is_data_error(capsys, ex1_file):
    code, out, _ = run(capsys, "encode", ex1_file, "1", "2", "3")
    tokens = out.splitlines()[-1].split()
    tokens[7] = str((int(tokens[7]) + 1) % 7)
    code, _, err = run(capsys, "decode", ex1_file, *tokens)
    assert code == 1 and "Inconsistent" in err


def test_decode_requires_exactly_one_source(capsys, ex1_file, tmp_path):
    code, _, err = run(capsys, "decode", ex1_file)
    assert code == 2
    word = tmp_path / "w.txt"
    word.write_text("1 0 0 6 4 2 5 3\n")
    code, _, err = run(capsys, "decode", ex1_file, "1", "--word-file", str(word))
    assert code == 2


# plumbing -----------------------------------------------------------------------


def test_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "mindist", "/nonexistent/code.txt")
    assert code == 2


def test_unknown_subcommand_is_usage_error(capsys):
    assert run(capsys, "frobnicate")[0] == 2


def test_emitted_files_reparse_despite_comment(ex1_file):
    text = open(ex1_file).read()
    assert text.startswith("# generated-by")
    assert parse_code(text).n == 8
