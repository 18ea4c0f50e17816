import pytest

from algebra.binary_form import BinaryForm
from errors import FormSourceError
from families.chebyshev import t_form
from families.trig_minpoly import psi_form
from form_sources import build, parse_form_source


class TestBuilders:
    def test_psi_carries_roots_and_galois(self):
        src = parse_form_source("psi:7")
        assert src.form == psi_form(7)
        assert (src.family, src.n, src.label) == ("psi", 7, "psi:7")
        assert len(src.roots) == 3
        assert len(src.galois) == 3

    def test_case_insensitive(self):
        assert build("t", 5).form == t_form(5)
        assert parse_form_source(" VTilde : 3 ").form == BinaryForm.of(1, 0, -3, 0)

    def test_utilde_one_has_no_roots(self):
        src = build("utilde", 1)
        assert src.form.degree == 0
        assert src.roots is None

    def test_unknown_family_suggests(self):
        with pytest.raises(FormSourceError) as e:
            parse_form_source("pis:7")
        assert "psi" in e.value.suggestions or "pi" in e.value.suggestions

    def test_index_must_be_positive(self):
        with pytest.raises(FormSourceError):
            build("psi", 0)


class TestJsonSources:
    def test_inline_list(self):
        assert parse_form_source("[1, 0, -3, 0]").form == BinaryForm.of(1, 0, -3, 0)

    def test_inline_rationals(self):
        src = parse_form_source('["1/2", 0, 1]')
        assert src.form.coeffs[0] * 2 == 1
        assert src.label == "inline JSON"

    def test_inline_object(self):
        assert parse_form_source('{"degree": 2, "coeffs": ["1", "0", "1"]}').form == BinaryForm.of(1, 0, 1)

    def test_file(self, tmp_path):
        path = tmp_path / "f.json"
        path.write_text('{"degree": 3, "coeffs": [1, 1, -2, -1]}')
        src = parse_form_source(str(path))
        assert src.form == psi_form(7)
        assert src.family is None

    @pytest.mark.parametrize("text", ["[]", "[1, 0", '"x"', "nothing-here", "[1.5, 2]"])
    def test_rejected(self, text):
        with pytest.raises(FormSourceError):
            parse_form_source(text)
