# keeps the tests directory importable (for the oracles module)
