import pytest

from glracks.cli import main
from glracks.formats import read_records, write_records, StructureRecord
from glracks.racks import dihedral


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheck:
    def test_valid_file(self, capsys, tmp_path):
        path = str(tmp_path / "ok.txt")
        write_records(path, [StructureRecord(n=2, s=((1, 0), (1, 0)))])
        code, out, _err = run(capsys, "check", path)
        assert code == 0
        assert "1/1 structures valid" in out

    def test_invalid_file(self, capsys, tmp_path):
        path = str(tmp_path / "bad.txt")
        with open(path, "w") as fh:
            fh.write("n=2 s=2,1;2,1 u=2,1 d=2,1\n")  # wrong d: should be id
        code, out, _err = run(capsys, "check", path)
        assert code == 1
        assert "INVALID" in out

    def test_missing_file(self, capsys, tmp_path):
        code, _out, err = run(capsys, "check", str(tmp_path / "nope.txt"))
        assert code == 3


class TestClassify:
    def test_stdout_counts(self, capsys):
        code, out, _err = run(capsys, "classify", "-n", "3")
        assert code == 0
        assert "g=13" in out and "r_qm=3" in out
        assert out.count("\n") == 14  # 13 records + summary

    def test_out_file_validates(self, capsys, tmp_path):
        path = str(tmp_path / "cls.txt")
        code, _out, _err = run(capsys, "classify", "-n", "4", "--out", path)
        assert code == 0
        assert len(read_records(path)) == 62

    def test_quandle_filter(self, capsys, tmp_path):
        path = str(tmp_path / "q.txt")
        code, out, _err = run(capsys, "classify", "-n", "4", "--quandles", "--out", path)
        assert code == 0
        assert len(read_records(path)) == 19
        assert "records=19" in out

    def test_long_run_gate(self, capsys):
        code, _out, err = run(capsys, "classify", "-n", "7")
        assert code == 2
        assert "--long-run" in err

    def test_jobs_output_identical(self, capsys, tmp_path):
        p1, p2 = str(tmp_path / "a.txt"), str(tmp_path / "b.txt")
        assert run(capsys, "classify", "-n", "4", "--out", p1)[0] == 0
        assert run(capsys, "classify", "-n", "4", "--jobs", "2", "--out", p2)[0] == 0
        assert open(p1).read() == open(p2).read()

    def test_source_library(self, capsys, tmp_path):
        lib = str(tmp_path / "lib.txt")
        rack = dihedral(4)
        with open(lib, "w") as fh:
            fh.write(repr([[[v + 1 for v in p.images] for p in rack.s]]))
        code, out, _err = run(capsys, "classify", "-n", "4", "--source", lib)
        assert code == 0
        assert "records=3" in out

    def test_source_order_mismatch(self, capsys, tmp_path):
        lib = str(tmp_path / "lib.txt")
        rack = dihedral(3)
        with open(lib, "w") as fh:
            fh.write(repr([[[v + 1 for v in p.images] for p in rack.s]]))
        code, _out, err = run(capsys, "classify", "-n", "4", "--source", lib)
        assert code == 1

    def test_checkpoint_resume_same_output(self, capsys, tmp_path):
        ckpt = str(tmp_path / "ckpt.txt")
        p1, p2 = str(tmp_path / "a.txt"), str(tmp_path / "b.txt")
        assert run(capsys, "classify", "-n", "4", "--out", p1)[0] == 0
        # first pass writes the checkpoint; second resumes from it
        assert run(capsys, "classify", "-n", "4", "--checkpoint", ckpt, "--out", p2)[0] == 0
        assert open(p1).read() == open(p2).read()
        assert run(capsys, "classify", "-n", "4", "--checkpoint", ckpt, "--out", p2)[0] == 0
        assert open(p1).read() == open(p2).read()


class TestOtherCommands:
    def test_enumerate_racks(self, capsys, tmp_path):
        path = str(tmp_path / "racks.txt")
        code, out, _err = run(capsys, "enumerate-racks", "-n", "4", "--out", path)
        assert code == 0
        assert "racks=19" in out
        assert len(read_records(path)) == 19

    def test_count(self, capsys):
        code, out, _err = run(capsys, "count", "-n", "4")
        assert code == 0
        assert out.strip() == "n=4 g=62 g_m=61 g_q=19 g_qm=18 r=19 r_m=18 r_q=7 r_qm=6"

    def test_aut(self, capsys, tmp_path):
        path = str(tmp_path / "r.txt")
        write_records(path, [StructureRecord(n=3, s=dihedral(3).tables())])
        code, out, _err = run(capsys, "aut", path)
        assert code == 0
        assert "|Aut|=6" in out and "|Inn|=6" in out

    def test_glstructures(self, capsys, tmp_path):
        path = str(tmp_path / "r.txt")
        write_records(path, [StructureRecord(n=4, s=dihedral(4).tables())])
        code, out, _err = run(capsys, "glstructures", path)
        assert code == 0
        assert "structures=4 classes=3" in out

    def test_functor_round_trip(self, capsys, tmp_path):
        src = str(tmp_path / "racks.txt")
        mid = str(tmp_path / "gl.txt")
        back = str(tmp_path / "back.txt")
        assert run(capsys, "enumerate-racks", "-n", "4", "--out", src)[0] == 0
        assert run(capsys, "functor", "f", src, "--out", mid)[0] == 0
        assert run(capsys, "functor", "g", mid, "--out", back)[0] == 0
        original = [r.s for r in read_records(src)]
        returned = [r.s for r in read_records(back)]
        assert original == returned

    def test_functor_g_needs_u(self, capsys, tmp_path):
        path = str(tmp_path / "r.txt")
        write_records(path, [StructureRecord(n=3, s=dihedral(3).tables())])
        code, _out, err = run(capsys, "functor", "g", path)
        assert code == 1

    def test_hom(self, capsys, tmp_path):
        path = str(tmp_path / "r3.txt")
        write_records(path, [StructureRecord(n=3, s=dihedral(3).tables())])
        code, out, _err = run(capsys, "hom", path, path)
        assert code == 0
        assert "homs=9" in out
        code, out, _err = run(capsys, "hom", path, path, "--rack-structure")
        assert code == 0
        assert "n=9" in out

    def test_quotient(self, capsys, tmp_path):
        from glracks.racks import permutation_rack
        from glracks.perm import parse_cycles

        path = str(tmp_path / "p.txt")
        rack = permutation_rack(3, parse_cycles("(123)", 3))
        write_records(path, [StructureRecord(n=3, s=rack.tables())])
        code, out, _err = run(capsys, "quotient", "assoc", path)
        assert code == 0
        assert "n=1" in out
