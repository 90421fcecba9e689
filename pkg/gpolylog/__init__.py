from ._version import __version__

__all__ = [
    'mpcore',
    'specialfn',
    'gfunc',
    'resurgent',
    'polyengine',
    'fitlab',
    'cli',
    'utils',
    'exceptions',
    '__version__'
    ]
