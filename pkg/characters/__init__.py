__all__ = ['test_diffchar', 'test_freed_lott', 'test_suspension']

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
