"""Base classes combining traitlets with abstract base classes and frozen values.

.. autosummary::
    :toctree: abstract traits

    ABCMetaHasTraits
    ABCHasTraits
    FrozenHasTraits
"""

import abc

from traitlets import HasTraits, MetaHasTraits, TraitError


class ABCMetaHasTraits(abc.ABCMeta, MetaHasTraits):
    """A MetaHasTraits subclass which also inherits from abc.ABCMeta."""


class ABCHasTraits(HasTraits, metaclass=ABCMetaHasTraits):
    """A HasTraits subclass which enables the features of Abstract Base Classes (ABC).

    Used for the sampler family of :mod:`fuzzysoft.propcheck`.
    """


class FrozenHasTraits(HasTraits):
    """A HasTraits subclass whose traits can only be set during construction.

    Subclasses assign their traits inside ``__init__`` (directly or through
    ``super().__init__(**kwargs)``) and call :meth:`_freeze` at the end. Any
    later assignment raises :class:`traitlets.TraitError`, which makes the
    instances safe to share between threads.
    """

    _frozen = False

    def _freeze(self):
        object.__setattr__(self, "_frozen", True)

    def __setattr__(self, name, value):
        if self._frozen and self.has_trait(name):
            msg = f"{type(self).__name__} is immutable; cannot set {name!r}"
            raise TraitError(msg)
        super().__setattr__(name, value)

    @classmethod
    def _from_validated(cls, **values):
        """Build a frozen instance from trait values that need no validation.

        Skips ``__init__``. Only for values derived from validated instances,
        with arrays already read-only.
        """
        obj = cls.__new__(cls)
        obj._trait_values.update(values)
        obj._freeze()
        return obj
