# Ambient helpers: logging, errors, configuration, deterministic reductions
