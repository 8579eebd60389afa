"""CLI (under construction)."""

def main(argv=None):
    return 0
