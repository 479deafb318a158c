__all__ = ['test_scenarios']

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
