__all__ = ['test_connections', 'test_registry', 'test_transport']

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
