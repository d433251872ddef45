"""Session-scoped default verification runs, shared across test modules.

The five verifiers are deterministic, so running each once and asserting
against the shared report keeps the suite fast without weakening anything.
"""

import pytest

from eigenprod import (
    verify_section3_equal,
    verify_section3_unequal,
    verify_section4_inert,
    verify_section4_noninert,
    verify_section5,
)


@pytest.fixture(scope="session")
def report_s3u():
    return verify_section3_unequal()


@pytest.fixture(scope="session")
def report_s3e():
    return verify_section3_equal()


@pytest.fixture(scope="session")
def report_s4i():
    return verify_section4_inert()


@pytest.fixture(scope="session")
def report_s4n():
    return verify_section4_noninert()


@pytest.fixture(scope="session")
def report_s5():
    return verify_section5()


@pytest.fixture(scope="session")
def default_reports(report_s3u, report_s3e, report_s4i, report_s4n, report_s5):
    return {
        "s3-unequal": report_s3u,
        "s3-equal": report_s3e,
        "s4-inert": report_s4i,
        "s4-noninert": report_s4n,
        "s5": report_s5,
    }
