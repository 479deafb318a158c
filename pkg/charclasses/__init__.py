__all__ = ['test_chern', 'test_euler', 'test_pontryagin', 'test_transgression',
           'test_whitney']

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
