from hypothesis import settings

settings.register_profile("stirling-trees", deadline=None, max_examples=50)
settings.load_profile("stirling-trees")
