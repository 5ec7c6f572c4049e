import pytest

from aclab import builtin_group


@pytest.fixture(scope="session")
def s3():
    return builtin_group("symmetric", 3)


@pytest.fixture(scope="session")
def q8():
    return builtin_group("quaternion8")


@pytest.fixture(scope="session")
def d4():
    return builtin_group("dihedral", 4)


def table(G):
    return G.mul.tolist()


ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def record(request):
    """Store a criterion's verdict for the end-of-run acceptance listing."""
    store = request.config.stash.setdefault(ACCEPTANCE, {})

    def _record(number, title, passed, detail=""):
        store[number] = (title, passed, detail)
        print(f"criterion {number}: {'PASS' if passed else 'FAIL'} {title} {detail}".rstrip())
        return passed

    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    store = config.stash.get(ACCEPTANCE, {})
    if not store:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(store):
        title, passed, detail = store[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number:2d}. {title}  {detail}".rstrip())
