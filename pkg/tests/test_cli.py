from cyclereg import generate_gp
from cyclereg.cli import main
from cyclereg.formats import decode_graph6, parse_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_petersen_graph6(capsys):
    code, out, _ = run(capsys, "generate", "gp", "5", "2", "--format", "graph6")
    assert code == 0
    assert decode_graph6(out.strip()) == generate_gp(5, 2)


def test_generate_fq4_edge_list(capsys):
    code, out, _ = run(capsys, "generate", "fq", "4")
    assert code == 0
    g = parse_edge_list(out)
    assert (g.n, g.m) == (8, 16)


def test_generate_bad_params_exit_2(capsys):
    code, _, err = run(capsys, "generate", "dp", "3", "2")
    assert code == 2
    assert "k must satisfy" in err


def test_generate_wrong_arity_exit_2(capsys):
    code, _, err = run(capsys, "generate", "i", "5", "1")
    assert code == 2


def test_recognize_petersen(tmp_path, capsys):
    path = tmp_path / "pet.txt"
    run(capsys, "generate", "gp", "5", "2", "--out", str(path))
    code, out, _ = run(capsys, "recognize", str(path))
    assert code == 0
    assert "I-graph I(5,1,2)" in out


def test_recognize_dp_canonical(tmp_path, capsys):
    path = tmp_path / "dp.g6"
    run(capsys, "generate", "dp", "10", "3", "--format", "graph6", "--out", str(path))
    code, out, _ = run(capsys, "recognize", str(path), "--family", "dp")
    assert code == 0 and "DP(10,2)" in out


def test_recognize_certificate_flag(tmp_path, capsys):
    path = tmp_path / "pet.txt"
    run(capsys, "generate", "gp", "5", "2", "--out", str(path))
    code, out, _ = run(capsys, "recognize", str(path), "--certificate")
    assert code == 0
    assert len(out.strip().splitlines()) == 11  # headline + 10 labels


def test_recognize_reject_exit_1(tmp_path, capsys):
    path = tmp_path / "c6.txt"
    path.write_text("6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n")
    code, out, _ = run(capsys, "recognize", str(path))
    assert code == 1
    assert out.startswith("reject")


def test_recognize_parse_error_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("3 9\n0 1\n")
    code, _, err = run(capsys, "recognize", str(path))
    assert code == 2 and "parse error" in err


def test_analyze_petersen(tmp_path, capsys):
    path = tmp_path / "pet.txt"
    run(capsys, "generate", "gp", "5", "2", "--out", str(path))
    code, out, _ = run(capsys, "analyze", str(path), "--l", "1", "--m", "8")
    assert code == 0 and "regular, lambda=8" in out


def test_analyze_fq5_two_paths(tmp_path, capsys):
    path = tmp_path / "fq5.txt"
    run(capsys, "generate", "fq", "5", "--out", str(path))
    code, out, _ = run(capsys, "analyze", str(path), "--l", "2", "--m", "6")
    assert code == 0 and "regular, lambda=12" in out


def test_analyze_witness(tmp_path, capsys):
    path = tmp_path / "g61.txt"
    run(capsys, "generate", "gp", "6", "1", "--out", str(path))
    code, out, _ = run(capsys, "analyze", str(path), "--l", "1", "--m", "8")
    assert code == 0 and "not cycle-regular" in out and "path" in out


def test_analyze_partition(tmp_path, capsys):
    path = tmp_path / "pet.txt"
    run(capsys, "generate", "gp", "5", "2", "--out", str(path))
    code, out, _ = run(capsys, "analyze", str(path), "--partition")
    assert code == 0 and "sigma=8: 15 edges" in out


def test_verify_tables_small(capsys):
    code, out, _ = run(capsys, "verify-tables", "--table", "5", "--max-n", "7")
    assert code == 0
    assert "3 found, 3 expected" in out


def test_verify_tables_reports_lambda_discrepancies(capsys):
    # the published lambda values for G(8,3) and G(12,5) disagree with the
    # oracle; the tool reports this and exits nonzero
    code, out, _ = run(capsys, "verify-tables", "--table", "5", "--max-n", "13")
    assert code == 1
    assert "DISCREPANCY at I(8, 1, 3)" in out
    assert "DISCREPANCY at I(12, 1, 5)" in out


def test_verify_tables_dp(capsys):
    code, out, _ = run(capsys, "verify-tables", "--table", "8", "--max-n", "12")
    assert code == 0
    assert "3 found, 3 expected" in out


def test_verify_tables_fq4(capsys):
    code, out, _ = run(capsys, "verify-tables", "--table", "fq4", "--max-n", "6")
    assert code == 0
    assert "FQ_4 [1,lambda,4]: published=9 oracle=9 ok" in out


def test_verify_tables_fq26_reports_refuted_values(capsys):
    code, out, _ = run(capsys, "verify-tables", "--table", "fq26", "--max-n", "6")
    assert code == 1
    assert "FQ_4 [2,lambda,6]: published=None oracle=12 DISCREPANCY" in out
    assert "FQ_6 [2,lambda,6]: published=2 oracle=40 DISCREPANCY" in out


def test_verify_tables_fq8conj_reports_verdicts(capsys):
    # n = 4 confirms the conjectured value, n = 5 refutes the cubic formula
    code, out, _ = run(capsys, "verify-tables", "--table", "fq8conj", "--max-n", "5")
    assert code == 1
    assert "FQ_4 [1,lambda,8]: conjectured=36 oracle=36 -> confirmed" in out
    assert "FQ_5 [1,lambda,8]: conjectured=996 oracle=672 -> refuted" in out


def test_bench_single_size_rows(capsys):
    code, out, _ = run(capsys, "bench", "--family", "i",
                       "--n-range", "200..200", "--repeats", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,edges,median_ns,ns_per_edge"
    assert len(lines) == 1 + 3  # one row per repeat
