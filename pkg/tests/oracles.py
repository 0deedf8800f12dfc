from typing import List, Sequence


def stack_machine_sort(letters: Sequence[int]) -> List[int]:
    """
    One pass through a stack: before pushing a letter, every smaller letter on top of the stack is
    popped to the output; the stack is emptied at the end.
    """
    out, stack = [], []
    for l in letters:
        while stack and stack[-1] < l:
            out.append(stack.pop())
        stack.append(l)
    while stack:
        out.append(stack.pop())
    return out
