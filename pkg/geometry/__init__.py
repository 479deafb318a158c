__all__ = ['symfunc', 'mesh', 'forms', 'symbolic', 'connections',
           'charforms', 'diffchar']

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
