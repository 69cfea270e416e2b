"""Command line entry point: ``valx <session-file> [--json]`` and ``valx --selftest``."""

from __future__ import annotations

import argparse
import sys

from .session import run_text


def selftest(out=sys.stdout) -> int:
    """Run the embedded golden sessions; print one line per session."""
    from .golden import GOLDEN

    failures = 0
    for name in sorted(GOLDEN):
        session, expected = GOLDEN[name]
        text, err, code = run_text(session)
        ok = code == 0 and text == expected
        failures += not ok
        out.write(f"selftest {name}: {'ok' if ok else 'FAIL'}\n")
        if not ok:
            out.write(err)
            for line in text.splitlines():
                out.write(f"  got: {line}\n")
    out.write(f"selftest summary: {len(GOLDEN) - failures}/{len(GOLDEN)} passed\n")
    return 0 if failures == 0 else 4


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="valx", description="Valuation-transcendental extensions "
                                 "from pairs of definition, with exact arithmetic.")
    ap.add_argument("session", nargs="?", help="session file ('-' for stdin)")
    ap.add_argument("--json", action="store_true", help="one JSON object per command")
    ap.add_argument("--selftest", action="store_true", help="run the embedded golden corpus")
    args = ap.parse_args(argv)
    if args.selftest:
        return selftest()
    if not args.session:
        ap.print_usage(sys.stderr)
        return 2
    try:
        if args.session == "-":
            text = sys.stdin.read()
        else:
            with open(args.session, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        sys.stderr.write(f"cannot read {args.session}: {exc.strerror}\n")
        return 2
    out, err, code = run_text(text, args.json)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
