__all__ = ['tf_cfg', 'error', 'shell', 'workers']

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
