from hypothesis import settings

# brute-force oracles have uneven run times; example counts bound the cost instead
settings.register_profile("default", deadline=None)
settings.load_profile("default")
