__all__ = ['test_newton', 'test_symfunc']

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
