__all__ = ['test_mesh', 'test_forms', 'test_stokes']

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
