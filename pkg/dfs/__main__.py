from dfs.cli import main

main()
