# Test suites for the adelic numerics toolkit
