"""Utilities for parameter validation."""
# License: GNU AGPLv3

from numbers import Integral

_CONTAINER_TYPES = (list, tuple, dict)


def _validate_single(parameter, reference, name):
    """Check one value against one reference. Return the reference type when
    it is a container type, so that the caller can descend into it."""
    if reference is None:
        return

    ref_type = reference.get('type', None)
    if not ((ref_type is None) or isinstance(parameter, ref_type)):
        raise TypeError(f"Parameter `{name}` is of type {type(parameter)} "
                        f"while it should be of type {ref_type}.")

    # Containers are checked entry by entry through 'of'
    if (ref_type in _CONTAINER_TYPES) \
            or isinstance(parameter, _CONTAINER_TYPES):
        return ref_type

    ref_in = reference.get('in', None)
    if parameter is not None and ref_in is not None \
            and parameter not in ref_in:
        raise ValueError(f"Parameter `{name}` is {parameter}, which is not "
                         f"in {ref_in}.")
    ref_other = reference.get('other', None)
    if ref_other is not None:
        ref_other(parameter)


def _validate_params(parameters, references, rec_name=None):
    for name, parameter in parameters.items():
        if name not in references:
            name_extras = "" if rec_name is None else f" in `{rec_name}`"
            raise KeyError(f"`{name}`{name_extras} is not an available "
                           f"parameter. Available parameters are in "
                           f"{tuple(references.keys())}.")

        reference = references[name]
        ref_type = _validate_single(parameter, reference, name)
        if not ref_type:
            continue
        ref_of = reference.get('of', None)
        if ref_of is None:
            continue
        if ref_type == dict:
            _validate_params(parameter, ref_of, rec_name=name)
        else:
            for i, parameter_elem in enumerate(parameter):
                _validate_single(parameter_elem, ref_of, f"{name}[{i}]")


def validate_params(parameters, references, exclude=None):
    """Validate (hyper)parameters against a reference description.

    Parameters
    ----------
    parameters : dict, required
        Dictionary mapping parameter names to values. Unless `exclude`
        contains some of its keys, every entry is checked against
        `references`.

    references : dict, required
        Dictionary mapping parameter names to reference dictionaries, which
        may contain the following keys:

        - ``'type'``, a class or tuple of classes; the parameter must be an
          instance of it.

        - ``'in'``, an object supporting ``in`` (typically a
          :class:`gpolylog.utils.Interval` or a tuple of admissible values);
          only used for non-container parameters.

        - ``'of'``, used when ``'type'`` is ``list``, ``tuple`` or ``dict``.
          For dictionaries it is a nested `references`; for lists and tuples
          it is a single reference that every entry must satisfy.

        - ``'other'``, a callable performing custom checks and raising on
          failure.

    exclude : list or None, optional, default: ``None``
        Parameter names present in `parameters` which should not be
        validated.

    Raises
    ------
    TypeError
        If a parameter has the wrong type.

    ValueError
        If a parameter is outside its admissible range.

    KeyError
        If a parameter name is not among the keys of `references`.

    Examples
    --------
    >>> from gpolylog.utils import Interval, validate_params
    >>> references = {'digits': {'type': int,
    ...                          'in': Interval(30, float('inf'),
    ...                                         closed='left')}}
    >>> validate_params({'digits': 50}, references)
    >>> validate_params({'digits': 10}, references)
    Traceback (most recent call last):
        ...
    ValueError: Parameter `digits` is 10, which is not in [30, inf).

    """
    exclude_ = [] if exclude is None else exclude
    parameters_ = {key: value for key, value in parameters.items()
                   if key not in exclude_}
    return _validate_params(parameters_, references)


def check_integer_grid(values, parity=None, name='grid'):
    """Input validation for grids of integer abscissae.

    Parameters
    ----------
    values : iterable of int
        Grid to check. Must be non-empty and strictly increasing.

    parity : ``'even'`` | ``'odd'`` | None, optional, default: ``None``
        If not ``None``, all entries must have this parity.

    name : str, optional, default: ``'grid'``
        Name used in error messages.

    Returns
    -------
    grid : list of int
        The validated grid.

    """
    grid = list(values)
    if not grid:
        raise ValueError(f"`{name}` must contain at least one value.")
    for value in grid:
        if not isinstance(value, Integral):
            raise TypeError(f"All entries of `{name}` must be integers, "
                            f"{value!r} is of type {type(value)}.")
    if any(b <= a for a, b in zip(grid[:-1], grid[1:])):
        raise ValueError(f"`{name}` must be strictly increasing.")
    if parity is not None:
        remainder = {'even': 0, 'odd': 1}[parity]
        wrong = [value for value in grid if value % 2 != remainder]
        if wrong:
            raise ValueError(f"All entries of `{name}` must be {parity}; "
                             f"{len(wrong)} are not, e.g. {wrong[0]}.")
    return [int(value) for value in grid]
