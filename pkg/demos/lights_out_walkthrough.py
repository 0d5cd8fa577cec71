"""Walk through solving a lights-out board, step by step.

Generates a solvable 8x8 board, solves it, prints the press pattern, and
replays the presses one at a time to confirm every light goes out.
"""

from zfsolve import (GridSpec, apply_presses, lightsout_preprocess, press,
                     random_solvable, solve_board)


def show(title, board):
    print(title)
    for row in board.grid():
        print("  " + "".join("#" if x else "." for x in row))
    print()


def main():
    g = GridSpec(8, 8)
    board = random_solvable(g, seed=2024)
    show("initial board (# = light on):", board)

    handle = lightsout_preprocess(g)
    print(f"preprocessed: chase along {g.rows} rows, core is {handle.k}x{handle.k}\n")

    pattern = solve_board(handle, board)
    show("press pattern:", pattern)

    replay = apply_presses(board, pattern)
    show("after pressing:", replay)
    print("all lights off:", replay.is_off())

    # a single extra press re-lights a plus shape
    poked = press(replay, (3, 3))
    show("one more press at (3,3):", poked)


if __name__ == "__main__":
    main()
