import pytest

from lgmodel.modelfile import builtin_model
from lgmodel.statespace import assemble


@pytest.fixture(scope="session")
def models():
    return {name: builtin_model(name) for name in ("cubics", "cubics-mirror", "quintic", "quintic-mirror")}


@pytest.fixture(scope="session")
def spaces(models):
    return {name: assemble(m) for name, m in models.items()}


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for num in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[num])
