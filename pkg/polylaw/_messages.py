""" Message templates shared by the error paths of polylaw. """

_bound_msg = lambda what, size, bound: f"{what} has length {size}, "+\
f"which exceeds the bound {bound}."

_endpoint_msg = lambda left, right: f"Endpoints do not match: {left} is not {right}."
