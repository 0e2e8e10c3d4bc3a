from toricbord.cli import main

main()
