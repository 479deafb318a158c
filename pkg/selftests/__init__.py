__all__ = ['test_specs', 'test_config', 'test_workers', 'test_shell',
           'test_harness', 'test_cli']

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
