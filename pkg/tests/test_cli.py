from bchcover.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# table1
# ---------------------------------------------------------------------------

def test_table1_single_row(capsys):
    code, out, err = run(capsys, "table1", "--max-n", "7")
    assert code == 0 and err == ""
    lines = out.strip().splitlines()
    assert lines[0] == "n,k,d,t,R,tau_general,tau_binary,perfect,a_covered,strict,comment"
    assert lines[1] == "7,4,3,1,1,1,2,true,true,true,Hamming"
    assert len(lines) == 2


def test_table1_up_to_31(capsys):
    code, out, err = run(capsys, "table1", "--max-n", "31")
    assert code == 0 and err == ""
    lines = out.strip().splitlines()
    assert len(lines) == 12  # header + the 11 rows with n <= 31
    assert "23,12,7,3,3,3,4,true,true,true,Wu-covered code" in lines
    assert "31,21,5,2,3,2,2,false,false,false," in lines


def test_table1_skips_heavy_rows_by_default(capsys):
    code, out, err = run(capsys, "table1", "--max-n", "63")
    assert code == 0
    rows = {tuple(line.split(",")[:2]): line for line in out.strip().splitlines()[1:]}
    assert rows[("63", "45")].split(",")[4] == "5"        # cheap row computed
    assert rows[("63", "39")].split(",")[4] == "skipped"
    assert rows[("63", "36")].split(",")[4] == "skipped"
    assert "R unknown" in rows[("63", "36")]


# ---------------------------------------------------------------------------
# johnson
# ---------------------------------------------------------------------------

def test_johnson_integer_curve(capsys):
    code, out, _ = run(capsys, "johnson", "--n", "31")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "d,tau_general,tau_binary"
    assert len(lines) == 16  # d = 1 .. 15
    assert lines[1] == "1,0,0"
    for line in lines[1:]:
        d, tg, tb = map(int, line.split(","))
        assert tb >= tg


def test_johnson_normalized(capsys):
    code, out, _ = run(capsys, "johnson", "--n", "31", "--steps", "8")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "d_over_n,tau_general_over_n,tau_binary_over_n"
    assert 2 <= len(lines) - 1 <= 8


def test_johnson_rejects_single_step(capsys):
    code, _, err = run(capsys, "johnson", "--n", "31", "--steps", "1")
    assert code == 1
    assert "steps" in err


# ---------------------------------------------------------------------------
# radius
# ---------------------------------------------------------------------------

def test_radius_output(capsys):
    code, out, _ = run(capsys, "radius", "--n", "23", "--delta", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "R = 3"
    assert lines[1] == "code = BCH [23,12,7]"
    assert lines[2] == "weight,cosets"
    counts = [int(line.split(",")[1]) for line in lines[3:7]]
    assert sum(counts) == 1 << 11
    assert lines[7].startswith("deepest_syndrome,")


def test_radius_weight_cap_error(capsys):
    code, _, err = run(capsys, "radius", "--n", "23", "--delta", "5", "--weight-cap", "2")
    assert code == 1
    assert "R > 2" in err


def test_radius_checkpoint_roundtrip(capsys, tmp_path):
    ckpt = str(tmp_path / "r.ckpt")
    first = run(capsys, "radius", "--n", "17", "--delta", "3", "--checkpoint", ckpt)
    assert first[0] == 0
    assert (tmp_path / "r.ckpt").exists()
    second = run(capsys, "radius", "--n", "17", "--delta", "3", "--checkpoint", ckpt)
    assert second == first


def test_radius_jobs_do_not_change_output(capsys):
    baseline = run(capsys, "radius", "--n", "17", "--delta", "3")
    for jobs in ("2", "5"):
        assert run(capsys, "radius", "--n", "17", "--delta", "3", "--jobs", jobs) == baseline


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------

def test_classify_output(capsys):
    code, out, _ = run(capsys, "classify", "--n", "31", "--delta", "11")
    assert code == 0
    lines = out.strip().splitlines()
    assert "R = 7" in lines
    assert "tau_binary = 7" in lines
    assert "a_covered = true" in lines
    assert "wu_covered = true" in lines
    assert "strictly_covered = false" in lines
    assert "comment = Wu-covered code" in lines


def test_classify_golay(capsys):
    code, out, _ = run(capsys, "classify", "--n", "23", "--delta", "5")
    assert code == 0
    assert "perfect = true" in out
    assert "strictly_covered = true" in out


# ---------------------------------------------------------------------------
# decode
# ---------------------------------------------------------------------------

def test_decode_ml_on_codeword(capsys):
    code, out, _ = run(capsys, "decode", "--n", "7", "--delta", "3",
                       "--word", "1101000", "--mode", "ml")
    assert code == 0
    lines = out.strip().splitlines()
    assert "radius_used = 0" in lines
    assert "exhausted = true" in lines
    assert lines[-1] == "1101000,0"


def test_decode_list_mode(capsys):
    code, out, _ = run(capsys, "decode", "--n", "7", "--delta", "3",
                       "--word", "1101001", "--mode", "list", "--tau", "3")
    assert code == 0
    body = out.strip().splitlines()
    entries = body[body.index("codeword,distance") + 1:]
    assert len(entries) >= 1
    assert all(int(e.split(",")[1]) <= 3 for e in entries)


def test_decode_bounded_mode(capsys):
    code, out, _ = run(capsys, "decode", "--n", "15", "--delta", "5",
                       "--word", "0" * 14 + "1", "--mode", "bounded")
    assert code == 0
    assert "radius_used = 2" in out


def test_decode_hex_word(capsys):
    plain = run(capsys, "decode", "--n", "7", "--delta", "3", "--word", "1101000", "--mode", "ml")
    hexed = run(capsys, "decode", "--n", "7", "--delta", "3", "--word", "0x0b", "--mode", "ml")
    assert plain == hexed


def test_decode_list_requires_tau(capsys):
    code, _, err = run(capsys, "decode", "--n", "7", "--delta", "3",
                       "--word", "1101000", "--mode", "list")
    assert code == 1
    assert "--tau" in err


def test_decode_rejects_bad_word(capsys):
    code, _, err = run(capsys, "decode", "--n", "7", "--delta", "3",
                       "--word", "110100", "--mode", "ml")
    assert code == 1
    assert "length" in err


def test_error_exit_on_even_length(capsys):
    code, _, err = run(capsys, "radius", "--n", "16", "--delta", "3")
    assert code == 1
    assert "odd" in err
