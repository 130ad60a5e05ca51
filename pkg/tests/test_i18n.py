import logging

import pytest

from gentzen.i18n import (
    REQUIRED_KEYS,
    CatalogError,
    builtin_catalog,
    category_label,
    load_catalog,
    message_for,
    rule_info,
)
from gentzen.rules import (
    DetailCode,
    Diagnostic,
    MistakeCategory,
    RuleId,
    Selection,
)

SEL = Selection(side="L", index=0)


def _diag(detail: DetailCode, **payload) -> Diagnostic:
    return Diagnostic(RuleId.AndL, detail, SEL, payload)


class TestCatalogCompleteness:
    @pytest.mark.parametrize("locale", ["en", "de"])
    def test_shipped_catalogs_cover_all_keys(self, locale):
        catalog = builtin_catalog(locale)
        assert REQUIRED_KEYS <= catalog.messages.keys()

    @pytest.mark.parametrize("locale", ["en", "de"])
    def test_placeholder_parity_with_english(self, locale):
        import re

        en = builtin_catalog("en")
        other = builtin_catalog(locale)
        for key, template in other.messages.items():
            ref = en.messages[key]
            assert set(re.findall(r"\{(\w+)\}", template)) == set(
                re.findall(r"\{(\w+)\}", ref)
            ), key


class TestMessageFor:
    def test_not_top_level_wording(self):
        msg = message_for(_diag(DetailCode.NOT_TOP_LEVEL, span="P & Q", found="exists"))
        assert "not a top-level formula" in msg
        assert "P & Q" in msg

    def test_german_line_used(self):
        d = _diag(DetailCode.NOT_TOP_LEVEL, span="P & Q", found="exists")
        german = message_for(d, "de")
        expected = builtin_catalog("de").messages["NOT_TOP_LEVEL"]
        assert expected.format(span="P & Q", found="exists") in german

    def test_unknown_locale_falls_back_to_english(self, caplog):
        d = _diag(DetailCode.WRONG_CONNECTIVE, expected="&", found="|")
        with caplog.at_level(logging.WARNING):
            msg = message_for(d, "fr")
        assert msg == message_for(d, "en")

    def test_category_always_mentioned(self):
        for detail in DetailCode:
            d = _diag(
                detail,
                span="s", found="f", expected="e", symbol="c", term="t",
                field="term", index="0",
            )
            msg = message_for(d)
            label = category_label(d.category)
            assert msg.startswith(label)
            assert len(msg) > len(label) + 2

    def test_never_raw_key_or_empty(self):
        for detail in DetailCode:
            msg = message_for(_diag(detail))
            assert msg
            assert detail.value not in msg  # templates spell things out


class TestRuleInfo:
    def test_conjunction_left_schema(self):
        info = rule_info(RuleId.AndL)
        assert "Γ, φ & ψ ==> Δ" in info
        assert "Γ, φ, ψ ==> Δ" in info
        assert "AndL" in info

    def test_existential_left_mentions_freshness(self):
        assert "fresh" in rule_info(RuleId.ExL)
        assert "frisch" in rule_info(RuleId.ExL, "de")

    def test_reflexivity_axiom_schema(self):
        info = rule_info(RuleId.AxiomRefl)
        assert "Γ ==> s = s, Δ" in info

    def test_every_rule_has_info_in_both_locales(self):
        for rule in RuleId:
            for locale in ("en", "de"):
                info = rule_info(rule, locale)
                assert rule.value in info
                assert "\n\n" in info


class TestLoadCatalog:
    def test_shipped_english_file_loads(self, tmp_path):
        from importlib import resources

        import gentzen

        source = resources.files("gentzen") / "locales" / "en.txt"
        catalog = load_catalog(str(source))
        assert REQUIRED_KEYS <= catalog.messages.keys()

    def test_missing_rule_key_named_in_error(self, tmp_path):
        from importlib import resources

        source = (resources.files("gentzen") / "locales" / "en.txt").read_text("utf-8")
        lines = [
            line for line in source.splitlines() if not line.startswith("AllR ")
        ]
        bad = tmp_path / "xx.txt"
        bad.write_text("\n".join(lines), "utf-8")
        with pytest.raises(CatalogError) as exc:
            load_catalog(bad)
        assert "AllR" in str(exc.value)

    def test_empty_file_rejected(self, tmp_path):
        empty = tmp_path / "yy.txt"
        empty.write_text("# nothing here\n", "utf-8")
        with pytest.raises(CatalogError):
            load_catalog(empty)

    def test_duplicate_key_rejected(self, tmp_path):
        bad = tmp_path / "zz.txt"
        bad.write_text("a.key = one\na.key = two\n", "utf-8")
        with pytest.raises(CatalogError) as exc:
            load_catalog(bad)
        assert "duplicate" in str(exc.value)

    def test_placeholder_mismatch_against_reference(self, tmp_path):
        ref = builtin_catalog("en")
        mutated = dict(ref.messages)
        mutated["WRONG_SIDE"] = "no placeholders at all"
        bad = tmp_path / "ww.txt"
        bad.write_text(
            "\n".join(f"{k} = {v}" for k, v in mutated.items()), "utf-8"
        )
        with pytest.raises(CatalogError) as exc:
            load_catalog(bad, reference=ref)
        assert "placeholder" in str(exc.value)


def test_category_labels_cover_all_categories():
    for cat in MistakeCategory:
        for locale in ("en", "de"):
            assert category_label(cat, locale)
