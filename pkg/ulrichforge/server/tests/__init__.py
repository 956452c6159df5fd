# empty init
