from . import REGISTRY, command


def show_help(out):
    rows = []
    for name in sorted(REGISTRY):
        hl = REGISTRY[name].get("help", "").strip()
        usage = hl if hl.lower().startswith(name.lower()) else f"{name} {hl}".strip()
        left, _, right = usage.partition(" - ")
        rows.append((left.strip(), right.strip()))

    width = min(56, max(len(u) for u, _ in rows) if rows else 0)
    print("Commands:", file=out)
    for u, d in rows:
        if d:
            print(f"  {u.ljust(width)}  - {d}", file=out)
        else:
            print(f"  {u}", file=out)
    print("Run 'rB <command> -h' for the flags of a command.", file=out)


@command("help", "help  - list commands")
def handle(ctx, args):
    show_help(ctx.out)
    return 0
