import pytest

from rlat.fileformat import (ParseError, build_spec, dot_export, emit,
                             emit_gluing, load_algebra, parse, parse_gluing,
                             write_tree)
from rlat.decompose import decompose, reassemble
from rlat.generate import boolean_algebra, build_an
from rlat.gluing import glue

TINY = ("elements 0 1\none 1\nneg 1 0\n"
        "join 0 1\njoin 1 1\nfusion 0 0\nfusion 0 1\n")


class TestParse:
    def test_round_trip_fixture_bytes(self, fixdir):
        for fname in ("a1.rlat", "sample_lower.rlat", "sample_upper.rlat"):
            text = (fixdir / fname).read_text(encoding="utf-8")
            assert emit(parse(text)) == text

    def test_round_trip_corpus(self, corpus6):
        for alg in corpus6.algebras:
            assert parse(emit(alg)) == alg

    def test_comments_and_blank_lines_ignored(self):
        text = "# header\n\n" + TINY.replace("one 1", "one 1\n# mid")
        assert parse(text) == parse(TINY)

    def test_seven_line_minimal_file(self):
        assert emit(boolean_algebra(1)) == TINY
        assert len(TINY.splitlines()) == 7

    def test_emit_injective_on_corpus(self, corpus6):
        texts = [emit(g) for g in corpus6.algebras]
        assert len(set(texts)) == len(texts)

    def test_unknown_token(self):
        with pytest.raises(ParseError) as exc:
            parse(TINY.replace("neg 1 0", "neg 1 x"))
        assert "x" in str(exc.value)

    def test_ragged_table(self):
        with pytest.raises(ParseError) as exc:
            parse(TINY.replace("join 1 1\n", "join 1\n"))
        assert exc.value.lineno == 5

    def test_missing_section(self):
        with pytest.raises(ParseError):
            parse(TINY.replace("one 1\n", ""))

    def test_duplicate_section(self):
        with pytest.raises(ParseError):
            parse(TINY + "one 0\n")

    def test_duplicate_element_token(self):
        with pytest.raises(ParseError):
            parse(TINY.replace("elements 0 1", "elements 0 0"))

    def test_unknown_section(self):
        with pytest.raises(ParseError) as exc:
            parse(TINY + "meet 0 0\n")
        assert "line 8" in str(exc.value)

    def test_wrong_row_count(self):
        with pytest.raises(ParseError):
            parse(TINY + "join 0 1\n")


class TestGluingSpecFile:
    def test_round_trip_fixture_bytes(self, fixdir):
        text = (fixdir / "sample.gspec").read_text(encoding="utf-8")
        assert emit_gluing(parse_gluing(text)) == text

    def test_parse_fields(self, fixdir):
        sf = parse_gluing((fixdir / "sample.gspec").read_text(encoding="utf-8"))
        assert sf.lower_ref == "sample_lower.rlat"
        assert sf.upper_ref == "sample_upper.rlat"
        assert (sf.a, sf.b) == ("a", "b")
        assert ("1_u", "b") in sf.pairs

    def test_missing_scalar_section(self, fixdir):
        text = (fixdir / "sample.gspec").read_text(encoding="utf-8")
        with pytest.raises(ParseError):
            parse_gluing(text.replace("a a\n", ""))

    def test_malformed_pair(self):
        with pytest.raises(ParseError):
            parse_gluing("lower x\nupper y\na a\nb b\nphi a 0_v\n")

    def test_duplicate_phi_key(self, fixdir):
        sf = parse_gluing((fixdir / "sample.gspec").read_text(encoding="utf-8"))
        lower = load_algebra(str(fixdir / sf.lower_ref))
        upper = load_algebra(str(fixdir / sf.upper_ref))
        dup = type(sf)(sf.lower_ref, sf.upper_ref, sf.a, sf.b,
                       sf.pairs + (("a", "v"),))
        with pytest.raises(ValueError):
            build_spec(dup, lower, upper)

    def test_unknown_name_in_spec(self, fixdir):
        sf = parse_gluing((fixdir / "sample.gspec").read_text(encoding="utf-8"))
        lower = load_algebra(str(fixdir / sf.lower_ref))
        upper = load_algebra(str(fixdir / sf.upper_ref))
        bad = type(sf)(sf.lower_ref, sf.upper_ref, "zzz", sf.b, sf.pairs)
        with pytest.raises(ValueError):
            build_spec(bad, lower, upper)


class TestLoadAlgebra:
    def test_plain_file(self, fixdir, a1):
        assert load_algebra(str(fixdir / "a1.rlat")) == a1

    def test_recursive_spec(self, fixdir, sample_spec):
        alg = load_algebra(str(fixdir / "sample.gspec"))
        assert alg == glue(sample_spec).result

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_algebra(str(tmp_path / "absent.rlat"))

    def test_cycle_detected(self, tmp_path):
        loop = tmp_path / "loop.gspec"
        loop.write_text("lower loop.gspec\nupper loop.gspec\n"
                        "a a\nb b\nphi a -> b\n", encoding="utf-8")
        with pytest.raises(ParseError) as exc:
            load_algebra(str(loop))
        assert "circular" in str(exc.value)


class TestWriteTree:
    def test_leaf_round_trip(self, tmp_path):
        alg = boolean_algebra(2)
        files = write_tree(decompose(alg), str(tmp_path))
        assert files == [("t.rlat", "leaf")]
        assert load_algebra(str(tmp_path / "t.rlat")) == alg

    def test_node_round_trip(self, tmp_path, a1):
        tree = decompose(a1)
        files = write_tree(tree, str(tmp_path))
        names = [f for f, _ in files]
        assert names[0] == "t.gspec"
        rebuilt = load_algebra(str(tmp_path / "t.gspec"))
        assert rebuilt == reassemble(tree)

    def test_family_member_round_trip(self, tmp_path):
        alg = build_an(2)
        tree = decompose(alg)
        write_tree(tree, str(tmp_path))
        rebuilt = load_algebra(str(tmp_path / "t.gspec"))
        assert sorted(rebuilt.names) == sorted(alg.names)
        assert rebuilt == reassemble(tree)


class TestDotExport:
    def test_fixture_lattice_diagram(self, a1):
        text = dot_export(a1, "lattice")
        lines = text.splitlines()
        assert lines[0] == "digraph lattice {"
        assert lines[-1] == "}"
        nodes = [l for l in lines if l.endswith(";") and "->" not in l
                 and l != "  rankdir=BT;"]
        edges = [l for l in lines if "->" in l]
        assert len(nodes) == 10
        assert len(edges) == 13

    def test_two_element_monoidal(self):
        text = dot_export(boolean_algebra(1), "monoidal")
        edges = [l for l in text.splitlines() if "->" in l]
        assert edges == ['  "0" -> "1";']

    def test_boolean_orders_agree_up_to_header(self):
        alg = boolean_algebra(2)
        lat = dot_export(alg, "lattice").splitlines()
        mon = dot_export(alg, "monoidal").splitlines()
        assert lat[0] != mon[0]
        assert lat[1:] == mon[1:]

    def test_names_are_quoted(self):
        from rlat import FiniteInRL
        alg = FiniteInRL(['z\\"', "1"], 1, [1, 0],
                         [[0, 1], [1, 1]], [[0, 0], [0, 1]])
        out = dot_export(alg, "lattice")
        assert '"z\\\\\\""' in out

    def test_unknown_order_rejected(self, a1):
        with pytest.raises(ValueError):
            dot_export(a1, "sideways")
