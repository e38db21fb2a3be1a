import nox

SOURCES = [
    "stirling_trees",
    "tests",
    "noxfile.py",
    "setup.py",
    "tasks.py",
]


@nox.session()
def lint(session):
    session.install("black", "flake8", "isort")
    session.run("black", "--check", *SOURCES)
    session.run("flake8", *SOURCES)
    session.run("isort", "--check", *SOURCES)


@nox.session(python=["3.8", "3.9", "3.10", "3.11"])
def test(session):
    session.install(".[testing,pandas]")
    session.run("pytest", "-m", "not slow", *session.posargs)


@nox.session(python="3.10")
def verify(session):
    session.install(".[testing]")
    session.run("pytest", "-m", "slow")
    session.run("stirling-trees", "verify", "--suite", "all")
