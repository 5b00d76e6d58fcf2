"""Command-line front end.

``algkernel run FILE`` executes a session; every other subcommand builds a
tiny session from its arguments (polynomials in the session grammar) and
runs it the same way.  Exit codes: 0 ok, 1 math-domain error or timeout,
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import os
import signal
import sys

from .errors import AlgKernelError, SessionError
from .sessionio.parser import ORDERINGS, tokenize
from .sessionio.render import render
from .sessionio.results import ResultDocument
from .sessionio.runner import run_session

PLANE = ("x", "y", "z")
AFFINE_PLANE = ("x", "y")


class _Timeout(BaseException):
    pass


def _globals(parser: argparse.ArgumentParser, suppress: bool):
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument("--format", choices=("text", "json"), default=d if suppress else "text")
    parser.add_argument("--ordering", choices=ORDERINGS, default=d)
    parser.add_argument("--field", default=d if suppress else "QQ", help="QQ or Fp:<p>")
    parser.add_argument("--timeout", type=float, default=d, metavar="SEC")
    parser.add_argument("--jobs", type=int, default=d if suppress else 1,
                        help="run independent session commands on N threads")


def _sub(sp, name, help_, *, gens=False, vars_=True):
    p = sp.add_parser(name, help=help_)
    _globals(p, suppress=True)
    if vars_:
        p.add_argument("--vars", help="comma-separated ring variables (default: inferred)")
    if gens:
        p.add_argument("gens", nargs="*", help="generators; read from stdin when omitted")
    return p


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="algkernel", description="Exact polynomial ideal computations.")
    _globals(ap, suppress=False)
    sp = ap.add_subparsers(dest="cmd", metavar="COMMAND")
    sp.required = True

    p = sp.add_parser("run", help="execute a session file ('-' for stdin)")
    _globals(p, suppress=True)
    p.add_argument("file")

    p = _sub(sp, "gb", "reduced Groebner basis", gens=True)
    p.add_argument("--nonreduced", action="store_true")
    p = _sub(sp, "nf", "normal form of F modulo the generators", gens=True)
    p.add_argument("-f", "--poly", dest="f", help="polynomial to reduce (else the first generator)")
    p = _sub(sp, "eliminate", "eliminate variables", gens=True)
    p.add_argument("--elim", required=True, help="comma-separated variables to eliminate")
    _sub(sp, "dim", "affine dimension", gens=True)
    for name, help_ in (("intersect", "intersection of ideals"), ("quotient", "ideal quotient I : J"),
                        ("saturate", "saturation I : J^infinity")):
        p = _sub(sp, name, help_)
        p.add_argument("ideals", nargs="*", help="ideals as comma-separated generator lists")
    p = _sub(sp, "closure", "projective closure", gens=True)
    p.add_argument("--name", help="name of the homogenizing variable")
    p = _sub(sp, "syz", "syzygies of the generators (or of --matrix columns)", gens=True)
    p.add_argument("--matrix", help="matrix as [[..], ..]")
    p = _sub(sp, "kernel", "kernel of the induced map of subquotients")
    p.add_argument("matrices", nargs="*", help="phi0 psi [phi], each as [[..], ..]")
    for name in ("resolve", "betti"):
        p = _sub(sp, name, "free resolution" if name == "resolve" else "Betti table", gens=True)
        p.add_argument("--nonminimal", action="store_true")
    p = _sub(sp, "hilbert", "Hilbert polynomial (or function value with --degree)", gens=True)
    p.add_argument("--degree", type=int)
    p = _sub(sp, "imult", "local intersection multiplicity", gens=True)
    p.add_argument("--at", help="point, e.g. 0:0 (default the origin)")
    for name in ("mult", "milnor"):
        p = _sub(sp, name, "multiplicity and tangent cone" if name == "mult" else "Milnor and Tjurina numbers",
                 gens=True)
        p.add_argument("--at", help="point, e.g. 0:0 (default the origin)")
    _sub(sp, "dual", "dual curve", gens=True)
    p = _sub(sp, "pluecker", "Pluecker invariants of a plane curve", vars_=False)
    for a in ("d", "delta", "kappa"):
        p.add_argument(a, type=int)
    p = _sub(sp, "genus", "geometric genus from degree and delta invariants", vars_=False)
    p.add_argument("d", type=int)
    p.add_argument("deltas", type=int, nargs="*")
    p = _sub(sp, "adjoint", "adjoint ideal of a curve with ordinary singularities", gens=True)
    p.add_argument("--sing", default="", help="e.g. '3*(0:0:1), 2*(1:1:1)'")
    p = _sub(sp, "rrspace", "Riemann-Roch space L(D)", gens=True)
    p.add_argument("--divisor", required=True, help="e.g. '2*(1:0:1) - (0:1:1)'")
    p.add_argument("--sing", default="")
    p.add_argument("--e", type=int)
    p = _sub(sp, "bezout", "certify Bezout's theorem on listed points", gens=True)
    p.add_argument("--points", default="", help="e.g. '8*(0:0:1), (1:0:0)'")
    p.add_argument("--residual", type=int, default=0)
    return ap


# -- one-shot commands -> session text


def _stdin_items() -> list[str]:
    text = sys.stdin.read()
    items = []
    for line in text.replace(";", "\n").splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            items.append(line)
    return items


def _infer_vars(texts, base=()) -> list[str]:
    names = set()
    for t in texts:
        for tok in tokenize(t):
            if tok.kind == "name":
                names.add(tok.text)
    if base and names <= set(base):
        return list(base)
    return sorted(names) or ["x"]


def _point(text: str) -> str:
    t = text.strip()
    return t if t.startswith("(") else "(%s)" % t


def _need(items, n, what):
    if len(items) < n:
        raise SessionError("%s needs %d %s" % (what, n, "inputs" if n > 1 else "input"))


def one_shot_session(args) -> str:
    cmd = args.cmd
    if cmd == "pluecker":
        return "pluecker %d %d %d;" % (args.d, args.delta, args.kappa)
    if cmd == "genus":
        return "genus %d %s;" % (args.d, " ".join(map(str, args.deltas)))

    items = list(getattr(args, "gens", None) or getattr(args, "ideals", None)
                 or getattr(args, "matrices", None) or [])
    if not items:
        items = _stdin_items()
    extra = [getattr(args, k, None) or "" for k in ("f", "matrix", "sing", "divisor", "points")]
    base = PLANE if cmd in ("dual", "adjoint", "rrspace", "bezout") else (
        AFFINE_PLANE if cmd in ("imult", "mult", "milnor") else ())
    if args.vars:
        variables = [v.strip() for v in args.vars.split(",") if v.strip()]
    else:
        variables = _infer_vars(items + [e for e in extra if e], base)
    order = " " + args.ordering if args.ordering else ""
    lines = ["ring R = %s[%s]%s;" % (args.field, ", ".join(variables), order)]
    gens = ", ".join(items)

    if cmd == "gb":
        lines += ["ideal I = %s;" % gens, "gb I%s;" % (" reduced=false" if args.nonreduced else "")]
    elif cmd == "nf":
        if args.f is None:
            _need(items, 1, "nf")
            f, rest = items[0], items[1:]
        else:
            f, rest = args.f, items
        lines += ["poly f = %s;" % f, "ideal I = %s;" % ", ".join(rest), "nf f I;"]
    elif cmd == "eliminate":
        lines += ["ideal I = %s;" % gens, "eliminate I %s;" % " ".join(v.strip() for v in args.elim.split(","))]
    elif cmd in ("dim", "closure", "resolve", "betti", "hilbert"):
        lines.append("ideal I = %s;" % gens)
        opt = ""
        if cmd == "closure" and args.name:
            opt = " name=%s" % args.name
        elif cmd in ("resolve", "betti") and args.nonminimal:
            opt = " minimal=false"
        elif cmd == "hilbert" and args.degree is not None:
            opt = " d=%d" % args.degree
        lines.append("%s I%s;" % (cmd, opt))
    elif cmd in ("intersect", "quotient", "saturate"):
        _need(items, 2, cmd)
        names = []
        for k, it in enumerate(items):
            names.append("I%d" % (k + 1))
            lines.append("ideal %s = %s;" % (names[-1], it))
        lines.append("%s %s;" % (cmd, " ".join(names)))
    elif cmd == "syz":
        if args.matrix:
            lines += ["matrix M = %s;" % args.matrix, "syz M;"]
        else:
            lines += ["ideal I = %s;" % gens, "syz I;"]
    elif cmd == "kernel":
        _need(items, 2, "kernel")
        names = []
        for k, it in enumerate(items):
            names.append("M%d" % k)
            lines.append("matrix %s = %s;" % (names[-1], it))
        lines.append("kernel %s;" % " ".join(names))
    elif cmd == "imult":
        _need(items, 2, "imult")
        at = " " + _point(args.at) if args.at else ""
        lines.append("imult %s, %s%s;" % (items[0], items[1], at))
    elif cmd in ("mult", "milnor"):
        _need(items, 1, cmd)
        at = " " + _point(args.at) if args.at else ""
        lines.append("%s %s%s;" % (cmd, items[0], at))
    elif cmd == "dual":
        _need(items, 1, "dual")
        lines.append("dual %s;" % items[0])
    elif cmd == "adjoint":
        _need(items, 1, "adjoint")
        lines.append("adjoint %s%s;" % (items[0], ", " + args.sing if args.sing else ""))
    elif cmd == "rrspace":
        _need(items, 1, "rrspace")
        sing = ", " + args.sing if args.sing else ""
        e = " e=%d" % args.e if args.e is not None else ""
        lines.append("rrspace %s, %s%s%s;" % (items[0], args.divisor, sing, e))
    elif cmd == "bezout":
        _need(items, 2, "bezout")
        pts = ", " + args.points if args.points else ""
        lines.append("bezout %s, %s%s residual=%d;" % (items[0], items[1], pts, args.residual))
    return "\n".join(lines) + "\n"


# -- entry point


def _emit(doc: ResultDocument, fmt: str, headers: bool, out):
    out.write(render(doc, fmt, headers=headers))
    out.flush()


def run(argv=None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    doc = ResultDocument()
    text = ""
    headers = args.cmd == "run"
    timeout = getattr(args, "timeout", None)
    old_handler = None
    if timeout:
        def on_alarm(signum, frame):
            raise _Timeout()

        old_handler = signal.signal(signal.SIGALRM, on_alarm)
        signal.setitimer(signal.ITIMER_REAL, timeout)
    try:
        if args.cmd == "run":
            if args.file == "-":
                text = sys.stdin.read()
            else:
                with open(args.file, encoding="utf-8") as fh:
                    text = fh.read()
        else:
            text = one_shot_session(args)
        run_session(text, jobs=max(1, args.jobs), default_ordering=args.ordering if headers else None, doc=doc)
    except _Timeout:
        doc.note = "timed out after %gs; %d result(s) completed before the limit" % (timeout, len(doc.results))
        _emit(doc, args.format, headers, out)
        err.write("error: timeout after %gs\n" % timeout)
        err.flush()
        if args.jobs > 1:
            os._exit(1)  # worker threads cannot be interrupted
        return 1
    except SessionError as exc:
        err.write("error: %s\n" % exc)
        err.write(_caret(text, exc))
        return 2
    except OSError as exc:
        err.write("error: %s\n" % exc)
        return 2
    except AlgKernelError as exc:
        _emit_partial(doc, args, headers, out)
        err.write("error: %s\n" % exc)
        return 1
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        _emit_partial(doc, args, headers, out)
        err.write("error: invalid input: %s\n" % exc)
        return 2
    finally:
        if timeout:
            signal.setitimer(signal.ITIMER_REAL, 0)
            signal.signal(signal.SIGALRM, old_handler)
    _emit(doc, args.format, headers, out)
    return 0


def _caret(text: str, exc: SessionError) -> str:
    lines = text.split("\n")
    if not exc.line or exc.line > len(lines):
        return ""
    src = lines[exc.line - 1]
    return "  %s\n  %s^\n" % (src, " " * (exc.column - 1))


def _emit_partial(doc, args, headers, out):
    if doc.results:
        doc.note = "stopped after %d result(s)" % len(doc.results)
        _emit(doc, args.format, headers, out)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
