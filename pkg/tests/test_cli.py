import json

from reslat.cli import main
from reslat.documents import document_to_algebra, dumps_canonical, algebra_to_document
from reslat import lukasiewicz, vs_b, vs_c


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_verify_pass_and_fail(capsys):
    code, _ = run(capsys, "verify", "VS.C", "--flags", "chain,commutative,integral")
    assert code == 0
    code, report = run_json(capsys, "verify", "VS.B", "--flags", "zero-bounded")
    assert code == 1
    assert report["checks"][0]["flag"] == "zero-bounded"


def test_verify_partial_algebra_document(tmp_path, capsys):
    from reslat import vs_k_triple

    path = tmp_path / "k.json"
    path.write_text(dumps_canonical(algebra_to_document(vs_k_triple().K)))
    code, report = run_json(capsys, "verify", str(path))
    assert code == 0 and report["ok"]


def test_identity_exit_codes(capsys):
    code, report = run_json(capsys, "identity", "VS.C", "--id", "div")
    assert code == 1
    assert report["assignment"] == {"x": 3, "y": 2}
    code, _ = run(capsys, "identity", "VS.C", "--id", "prel")
    assert code == 0
    code, _ = run(capsys, "identity", "VS.B", "--id", "x*1 = x")
    assert code == 0


def test_identity_with_zero_flag(capsys):
    code, _ = run(capsys, "identity", "lukasiewicz(3)", "--id", "inv", "--zero", "0")
    assert code == 0


def test_construct_outputs_canonical_document(capsys):
    code, report = run_json(capsys, "construct", "ordinal-sum", "--lower", "lukasiewicz(3)", "--upper", "two")
    assert code == 0
    alg = document_to_algebra(report["algebra"])
    assert alg.product == vs_b().product

    code, report = run_json(capsys, "construct", "builtin", "--name", "VS.C")
    assert code == 0
    assert document_to_algebra(report["algebra"]).ldiv == vs_c().ldiv

    code, report = run_json(capsys, "construct", "gluing", "--upper", "two")
    assert code == 0
    assert document_to_algebra(report["algebra"]).product == vs_c().product

    code, report = run_json(capsys, "construct", "rotation", "--base", "trivial", "--nucleus", "identity", "--levels", "4")
    assert code == 0
    assert document_to_algebra(report["algebra"]).product == lukasiewicz(4).product


def test_embed_and_filters(capsys):
    code, report = run_json(capsys, "embed", "VS.A", "VS.B")
    assert code == 0 and report["embeddings"] == [[0, 2, 3]]
    code, _ = run(capsys, "embed", "VS.B", "VS.A")
    assert code == 1
    code, report = run_json(capsys, "filters", "VS.B")
    assert code == 0 and report["filters"] == [[3], [2, 3], [0, 1, 2, 3]]


def test_quotient_command(capsys):
    code, report = run_json(capsys, "quotient", "VS.B", "--filter", "2,3")
    assert code == 0
    assert document_to_algebra(report["algebra"]).product == lukasiewicz(3).product
    code, _ = run(capsys, "quotient", "VS.B", "--filter", "1,3")
    assert code == 2  # not a filter


def test_enumerate_command(capsys):
    code, report = run_json(capsys, "enumerate", "--size", "3", "--flags", "integral,commutative", "--count")
    assert code == 0 and report["count"] == 2
    code, report = run_json(capsys, "enumerate", "--size", "3", "--flags", "integral,commutative")
    assert code == 0 and len(report["algebras"]) == 2
    code, report = run_json(capsys, "enumerate", "--size", "4", "--flags", "integral", "--limit", "3")
    assert code == 0 and len(report["algebras"]) == 3


def test_amalgam_rejects_bad_bounds(capsys):
    assert main(["amalgam", "--vf", "VS", "--max-size", "0"]) == 2


def test_amalgam_commands(capsys):
    code, report = run_json(capsys, "amalgam", "--vf", "VS", "--max-size", "6")
    assert code == 1 and report["search"]["verdict"] == "UNSAT"
    code, report = run_json(capsys, "one-amalgam", "--vf", "VS", "--max-size", "6")
    assert code == 1 and report["search"]["verdict"] == "UNSAT"


def test_amalgam_with_rotation(capsys):
    code, report = run_json(capsys, "amalgam", "--vf", "VS", "--rotate", "const-1:2", "--max-size", "7")
    assert code == 1 and report["search"]["verdict"] == "UNSAT"


def test_obstruct_command(capsys):
    code, report = run_json(capsys, "obstruct", "--vf", "VS")
    assert code == 0
    assert report["witness"] == [1, 1, 2, 0, 0, "LEFT"]
    code, report = run_json(capsys, "obstruct", "--vf", "VS", "--check", "1,1,2,0,0,LEFT")
    assert code == 0 and report["accepted"]
    code, report = run_json(capsys, "obstruct", "--vf", "VS", "--check", "1,1,2,1,0")
    assert code == 1 and report["clause"] == "W2"


def test_vformation_from_file(tmp_path, capsys):
    from reslat import vs_formation
    from reslat.documents import vformation_to_document

    path = tmp_path / "vf.json"
    path.write_text(dumps_canonical(vformation_to_document(vs_formation())))
    code, report = run_json(capsys, "amalgam", "--vf", str(path), "--max-size", "5")
    assert code == 1


def test_builtin_option_spelling(capsys):
    code, _ = run(capsys, "verify", "--builtin", "VS.C", "--flags", "chain,commutative,integral")
    assert code == 0
    code, _ = run(capsys, "identity", "--builtin", "VS.C", "--id", "div")
    assert code == 1
    assert main(["verify"]) == 2
    assert main(["verify", "VS.B", "--builtin", "VS.C"]) == 2


def test_construct_nucleus_image(capsys):
    code, report = run_json(capsys, "construct", "nucleus-image", "--base", "VS.A", "--nucleus", "const-1")
    assert code == 0
    assert document_to_algebra(report["algebra"]).size == 1


def test_usage_and_format_errors(capsys):
    assert main(["verify", "no-such-algebra"]) == 2
    assert main(["identity", "VS.B", "--id", "x +* y = x"]) == 2
    assert main(["frobnicate"]) == 2
    assert main([]) == 2
    assert main(["identity", "VS.B", "--id", "inv"]) == 2  # unpointed


def test_budget_exit_code(capsys):
    vf = "VS"
    code = main(["enumerate", "--size", "6", "--flags", "integral", "--count"])  # big but fine
    assert code == 0
    code = main(
        ["amalgam", "--vf", "VS", "--max-size", "5", "--budget", "0"]
    )  # propagation solves every VS placement without branching, still UNSAT
    assert code in (1, 3)


def test_output_file_is_atomic(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(["verify", "VS.B", "--format", "json", "--output", str(target)])
    assert code == 0
    assert json.loads(target.read_text())["ok"] is True
    assert not list(tmp_path.glob("*.tmp"))


def test_paper_command_small_bound(capsys):
    code, report = run_json(capsys, "paper", "--max-size", "6")
    assert code == 0 and report["ok"]
    names = [s["step"] for s in report["steps"]]
    assert any("obstruction witness" in s for s in names)
    code = main(["paper", "--max-size", "5"])
    assert code == 2  # pipeline needs max-size >= 6
