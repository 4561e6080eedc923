def latch_reference(inputs, initial=0):
    """
    Stepwise latch recurrence f(t) = x1(t) OR (x2(t) AND f(t-1)).

    Parameters:
        inputs (sequence of (int, int)): Input pair per step; non-empty.
        initial (int): State before the first step.

    Returns:
        list[int]: State after each step.
    """
    if len(inputs) == 0:
        raise ValueError("latch_reference needs at least one input step")
    state = 1 if initial else 0
    states = []
    for x1, x2 in inputs:
        state = int(bool(x1) or (bool(x2) and bool(state)))
        states.append(state)
    return states


def encode_nand_latch_inputs(x1, x2):
    """
    Map the active-low set/reset pins of a cross-coupled NAND latch to the
    recurrence's (set, hold) inputs: set = NOT X1, hold = X2.
    """
    return 1 - x1, x2
