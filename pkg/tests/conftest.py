from hypothesis import settings

# Deterministic property runs, no example database on disk.
settings.register_profile("suite", derandomize=True, database=None)
settings.load_profile("suite")
