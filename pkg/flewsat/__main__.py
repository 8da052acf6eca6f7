from flewsat.app.cli import main

main()
