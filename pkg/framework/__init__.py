__all__ = ['specs', 'manifolds', 'bundles', 'cycles', 'characters',
           'scenarios', 'tester']

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
