"""Command line front end: batch checking, verification, export, serve.

The CLI is a thin client over the library; all rule logic lives in the
core modules.  Exit codes: 0 success, 1 check/verification failure,
2 I/O or usage problems, 3 malformed proof files.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import i18n
from .export import export_svg, export_text
from .parser import ParseError, parse_sequent
from .prooftree import SchemaError, load, verify

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_IO = 2
EXIT_SCHEMA = 3

_locale_option = click.option(
    "--locale", default="en", envvar=i18n.LOCALE_ENV_VAR, show_default=True,
    help="Locale for diagnostic messages.",
)


@click.group()
@click.version_option(package_name="gentzen")
def main() -> None:
    """Sequent-calculus proof assistant: check inputs, verify and export proofs."""


def _read(path: str) -> str:
    try:
        return Path(path).read_text("utf-8")
    except OSError as e:
        click.echo(f"error: cannot read {path}: {e.strerror or e}", err=True)
        sys.exit(EXIT_IO)


def _read_bytes(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as e:
        click.echo(f"error: cannot read {path}: {e.strerror or e}", err=True)
        sys.exit(EXIT_IO)


@main.command()
@click.argument("sequent_file")
def check(sequent_file: str) -> None:
    """Parse every sequent line of SEQUENT_FILE; report errors with offsets."""
    text = _read(sequent_file)
    failures = 0
    total = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        total += 1
        try:
            parse_sequent(stripped)
        except ParseError as e:
            failures += 1
            click.echo(f"{sequent_file}:{lineno}: offset {e.offset}: {e.message}")
    if failures:
        click.echo(f"{failures} of {total} sequent(s) failed to parse")
        sys.exit(EXIT_FAIL)
    click.echo(f"{total} sequent(s) ok")


def _load_proof(path: str):
    data = _read_bytes(path)
    try:
        return load(data)
    except SchemaError as e:
        click.echo(f"error: {path}: {e.path}: {e.message}", err=True)
        sys.exit(EXIT_SCHEMA)


@main.command(name="verify")
@click.argument("proof_file")
@_locale_option
def verify_cmd(proof_file: str, locale: str) -> None:
    """Load PROOF_FILE and independently replay every step."""
    tree = _load_proof(proof_file)
    report = verify(tree)
    for chk in report.failures():
        if chk.diagnostic is not None:
            category = chk.diagnostic.category.value
            message = i18n.message_for(chk.diagnostic, locale)
        else:
            category = "Inconsistent"
            message = chk.problem or "check failed"
        click.echo(f"node {chk.node_id} [{category}] {message}")
    if report.verdict:
        click.echo(f"verdict: OK ({len(report.checks)} step(s) verified)")
        return
    if not report.complete:
        click.echo("verdict: FAIL (proof has open goals)")
    else:
        click.echo("verdict: FAIL")
    sys.exit(EXIT_FAIL)


@main.command()
@click.argument("proof_file")
@click.option("--format", "fmt", type=click.Choice(["text", "svg"]), default="text",
              show_default=True, help="Output format.")
@click.option("--out", "out_path", default=None, help="Output file (stdout if omitted).")
def export(proof_file: str, fmt: str, out_path: str | None) -> None:
    """Render PROOF_FILE as a stacked derivation (text) or SVG."""
    tree = _load_proof(proof_file)
    rendered = export_text(tree) if fmt == "text" else export_svg(tree)
    if out_path is None:
        click.echo(rendered, nl=False)
        return
    try:
        Path(out_path).write_text(rendered, "utf-8")
    except OSError as e:
        click.echo(f"error: cannot write {out_path}: {e.strerror or e}", err=True)
        sys.exit(EXIT_IO)


@main.command()
@click.option("--port", default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--data-dir", default=None, help="Directory for session proof files.")
@click.option("--ui-dir", default=None, help="Serve a built frontend from this directory.")
@_locale_option
def serve(port: int, host: str, data_dir: str | None, ui_dir: str | None, locale: str) -> None:
    """Run the HTTP session API (and optionally the browser UI)."""
    import uvicorn

    from .service import create_app

    app = create_app(data_dir=data_dir, default_locale=locale)
    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")
    uvicorn.run(app, host=host, port=port)
