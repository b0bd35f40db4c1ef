import io
from contextlib import redirect_stderr, redirect_stdout

import pytest

from ordsub import SetFunction
from ordsub.cli import main as cli_main


def intfn(values, n=None):
    """Integer-valued function on default element names."""
    if n is None:
        n = (len(values) - 1).bit_length()
    return SetFunction.from_ints(n, values)


def run_cli(*argv):
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli_main(list(argv))
    return code, out.getvalue(), err.getvalue()


# Standard fixtures on E = {a, b}; masks 0=∅, 1={a}, 2={b}, 3={a,b}.

@pytest.fixture
def f_const():
    return intfn([0, 0, 0, 0])


@pytest.fixture
def f_r3():
    # injective, Q4 but not Q3: f(a) < f(∅) < f(b) < f(ab)
    return intfn([1, 0, 2, 3])


@pytest.fixture
def f_cut():
    # single-edge cut function on {a, b}
    return intfn([0, 1, 1, 0])


@pytest.fixture
def f_q1nq2():
    # satisfies Q1 but not Q2
    return intfn([1, 0, 2, 2])


@pytest.fixture
def f_card():
    # cardinality (modular)
    return intfn([0, 1, 1, 2])


@pytest.fixture
def all_fixtures(f_const, f_r3, f_cut, f_q1nq2, f_card):
    return {
        "const": f_const,
        "r3": f_r3,
        "cut": f_cut,
        "q1nq2": f_q1nq2,
        "card": f_card,
    }
