"""Localized feedback from plain-text message catalogs.

Catalogs are line-based ``key = template`` files (``#`` comments, UTF-8),
one per locale, so new languages can be added without touching code.
English is the reference locale: other catalogs are validated against it
for missing keys and placeholder parity, and serve as its fallback.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Union

from .rules import (
    RULE_SCHEMAS,
    CATEGORY_OF,
    DetailCode,
    Diagnostic,
    MistakeCategory,
    RuleId,
)

log = logging.getLogger(__name__)

DEFAULT_LOCALE = "en"
LOCALE_ENV_VAR = "GENTZEN_LOCALE"

REQUIRED_KEYS = (
    frozenset(c.value for c in DetailCode)
    | frozenset(r.value for r in RuleId)
    | frozenset(f"category.{c.value}" for c in MistakeCategory)
)

_PLACEHOLDER_RE = re.compile(r"\{(\w+)\}")


class CatalogError(ValueError):
    """A catalog file that violates the format or is incomplete."""


@dataclass(frozen=True)
class MessageCatalog:
    locale: str
    messages: dict[str, str]

    def get(self, key: str) -> str | None:
        return self.messages.get(key)


def _parse_catalog(text: str, origin: str) -> dict[str, str]:
    messages: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise CatalogError(f"{origin}:{lineno}: expected 'key = template'")
        key, template = line.split("=", 1)
        key = key.strip()
        template = template.strip()
        if not key or not template:
            raise CatalogError(f"{origin}:{lineno}: empty key or template")
        if key in messages:
            raise CatalogError(f"{origin}:{lineno}: duplicate key {key!r}")
        messages[key] = template
    if not messages:
        raise CatalogError(f"{origin}: catalog is empty")
    return messages


def _placeholders(template: str) -> frozenset[str]:
    return frozenset(_PLACEHOLDER_RE.findall(template))


def _validate(messages: dict[str, str], origin: str, reference: MessageCatalog | None) -> None:
    missing = REQUIRED_KEYS - messages.keys()
    if missing:
        raise CatalogError(f"{origin}: missing key {sorted(missing)[0]!r}")
    if reference is not None:
        missing_vs_ref = reference.messages.keys() - messages.keys()
        if missing_vs_ref:
            raise CatalogError(
                f"{origin}: missing key {sorted(missing_vs_ref)[0]!r} "
                f"(present in the {reference.locale} reference)"
            )
        for key, template in messages.items():
            ref_template = reference.messages.get(key)
            if ref_template is None:
                continue
            if _placeholders(template) != _placeholders(ref_template):
                raise CatalogError(
                    f"{origin}: placeholder mismatch for {key!r} against "
                    f"the {reference.locale} reference"
                )


def load_catalog(
    path: Union[str, Path], locale: str | None = None, reference: MessageCatalog | None = None
) -> MessageCatalog:
    """Parse and validate one catalog file.

    Raises :class:`CatalogError` on duplicate keys, required keys that are
    missing, keys missing relative to ``reference``, or placeholder
    mismatches against ``reference``.
    """
    p = Path(path)
    messages = _parse_catalog(p.read_text("utf-8"), str(p))
    _validate(messages, str(p), reference)
    return MessageCatalog(locale or p.stem, messages)


_builtin_cache: dict[str, MessageCatalog] = {}


def available_locales() -> list[str]:
    folder = resources.files(__package__) / "locales"
    return sorted(
        entry.name[: -len(".txt")]
        for entry in folder.iterdir()
        if entry.name.endswith(".txt")
    )


def builtin_catalog(locale: str) -> MessageCatalog:
    """The shipped catalog for ``locale``; unknown locales fall back to English."""
    if locale in _builtin_cache:
        return _builtin_cache[locale]
    folder = resources.files(__package__) / "locales"
    entry = folder / f"{locale}.txt"
    if not entry.is_file():
        if locale == DEFAULT_LOCALE:
            raise CatalogError("the English reference catalog is missing")
        log.warning("no catalog for locale %r, falling back to English", locale)
        return builtin_catalog(DEFAULT_LOCALE)
    reference = None if locale == DEFAULT_LOCALE else builtin_catalog(DEFAULT_LOCALE)
    messages = _parse_catalog(entry.read_text("utf-8"), f"locales/{locale}.txt")
    _validate(messages, f"locales/{locale}.txt", reference)
    catalog = MessageCatalog(locale, messages)
    _builtin_cache[locale] = catalog
    return catalog


class _Context(dict):
    def __missing__(self, key: str) -> str:  # tolerate unused placeholders
        return "?"


def render(key: str, context: dict[str, str], locale: str = DEFAULT_LOCALE) -> str:
    """Instantiate the template for ``key``, falling back to English."""
    catalog = builtin_catalog(locale)
    template = catalog.get(key)
    if template is None:
        if catalog.locale != DEFAULT_LOCALE:
            log.warning(
                "key %r missing in locale %r, falling back to English", key, locale
            )
            template = builtin_catalog(DEFAULT_LOCALE).get(key)
        if template is None:
            return f"{key} {context}"
    return template.format_map(_Context(context))


def category_label(category: MistakeCategory, locale: str = DEFAULT_LOCALE) -> str:
    return render(f"category.{category.value}", {}, locale)


def message_for(d: Diagnostic, locale: str = DEFAULT_LOCALE) -> str:
    """Human-readable rejection: category label plus the detail message."""
    context = dict(d.payload)
    context.setdefault("rule", d.rule.value)
    body = render(d.detail.value, context, locale)
    label = category_label(CATEGORY_OF[d.detail], locale)
    return f"{label}: {body}"


def rule_info(rule: RuleId, locale: str = DEFAULT_LOCALE) -> str:
    """The rule's formal schema plus its localized explanation."""
    schema = RULE_SCHEMAS[rule]
    top = "    ".join(schema.premisses)
    bar_width = max(len(top), len(schema.conclusion))
    lines = []
    if top:
        lines.append(top.center(bar_width).rstrip())
    lines.append("-" * bar_width + " " + rule.value)
    lines.append(schema.conclusion.center(bar_width).rstrip())
    explanation = render(rule.value, {}, locale)
    return "\n".join(lines) + "\n\n" + explanation
