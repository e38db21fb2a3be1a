import sys

from termcolor import colored, cprint


def info(text):
    print(text)


def success(text):
    cprint(text, "green")


def error(text):
    cprint(text, "red", file=sys.stderr)


def status(passed, informational=False):
    if informational:
        return colored("INFO", "cyan")
    return colored("PASS", "green") if passed else colored("FAIL", "red")
