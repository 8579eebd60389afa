"""Identity registry (under construction)."""

def registry():
    return []
